"""Dense Hermitian-matrix algebra over labeled tensor-product spaces.

Basis ordering is big-endian throughout: the leftmost subsystem varies
slowest, so for dims ``(2, 2, 2)`` the basis runs ``|000>, |001>, |010>, ...``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
EIG_INPUT_TOL = 1e-10
JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 60


def _frozen(data) -> np.ndarray:
    arr = np.array(data, dtype=np.complex128, copy=True)
    arr.setflags(write=False)
    return arr


def _hermiticity_defect(arr: np.ndarray) -> float:
    if arr.size == 0:
        return 0.0
    return float(np.max(np.abs(arr - arr.conj().T)))


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """Hermitian operator on a tensor-product space with subsystem ``dims``.

    No trace or positivity constraint; partial transposes live here.
    """

    data: np.ndarray
    dims: tuple[int, ...]

    def __init__(self, data, dims: Sequence[int] | None = None):
        arr = _frozen(data)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"matrix must be square, got shape {arr.shape}")
        if dims is None:
            dims = (arr.shape[0],)
        dims = tuple(int(d) for d in dims)
        if any(d < 2 for d in dims):
            raise ValueError(f"every subsystem dimension must be >= 2, got {dims}")
        if math.prod(dims) != arr.shape[0]:
            raise ValueError(f"dims {dims} do not match matrix size {arr.shape[0]}")
        defect = _hermiticity_defect(arr)
        if defect > HERMITIAN_TOL:
            raise ValueError(f"matrix is not Hermitian (max |m - m^H| = {defect:.3e})")
        object.__setattr__(self, "data", arr)
        object.__setattr__(self, "dims", dims)
        self._validate()

    def _validate(self) -> None:
        pass

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def trace(self) -> float:
        return float(np.trace(self.data).real)

    def __array__(self, dtype=None, copy=None):
        return self.data if dtype is None else self.data.astype(dtype)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dims={self.dims})"


class DensityMatrix(HermitianMatrix):
    """Unit-trace positive semidefinite :class:`HermitianMatrix`."""

    def _validate(self) -> None:
        tr = np.trace(self.data)
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"density matrix must have unit trace, got {tr.real:.15g}")
        lo = eig_hermitian(self.data)[0]
        if lo < -PSD_TOL:
            raise ValueError(f"density matrix is not positive semidefinite (min eigenvalue {lo:.3e})")


def _as_array(m) -> np.ndarray:
    if isinstance(m, HermitianMatrix):
        return m.data
    return np.asarray(m, dtype=np.complex128)


def _check_subsystem(dims: tuple[int, ...], subsystem: int) -> int:
    if not isinstance(subsystem, (int, np.integer)) or isinstance(subsystem, bool):
        raise TypeError(f"subsystem index must be an integer, got {subsystem!r}")
    if not 0 <= subsystem < len(dims):
        raise ValueError(f"subsystem index {subsystem} out of range for dims {dims}")
    return int(subsystem)


def kron(a: HermitianMatrix, b: HermitianMatrix) -> HermitianMatrix:
    """Tensor product; subsystem lists are concatenated.

    Returns a :class:`DensityMatrix` when both factors are density matrices.
    """
    data = np.kron(a.data, b.data)
    dims = a.dims + b.dims
    if isinstance(a, DensityMatrix) and isinstance(b, DensityMatrix):
        return DensityMatrix(data, dims)
    return HermitianMatrix(data, dims)


def partial_trace(rho: HermitianMatrix, subsystem: int) -> HermitianMatrix:
    """Trace out one subsystem.  Density matrices map to density matrices."""
    k = _check_subsystem(rho.dims, subsystem)
    if len(rho.dims) == 1:
        raise ValueError("cannot trace out the only subsystem")
    n = len(rho.dims)
    t = rho.data.reshape(rho.dims + rho.dims)
    reduced = np.trace(t, axis1=k, axis2=k + n)
    dims = rho.dims[:k] + rho.dims[k + 1 :]
    d = math.prod(dims)
    return type(rho)(reduced.reshape(d, d), dims)


def partial_transpose(rho: HermitianMatrix, subsystem: int) -> HermitianMatrix:
    """Transpose the row/column indices of one subsystem only.

    Pure index permutation, so applying it twice returns the input exactly.
    """
    k = _check_subsystem(rho.dims, subsystem)
    n = len(rho.dims)
    t = rho.data.reshape(rho.dims + rho.dims)
    t = np.swapaxes(t, k, k + n)
    return HermitianMatrix(t.reshape(rho.dim, rho.dim), rho.dims)


def _jacobi_rotate(a: np.ndarray, v: np.ndarray, p: int, q: int, negligible: float) -> None:
    apq = a[p, q]
    r = abs(apq)
    if r <= negligible:
        # shifts eigenvalues by at most r**2 / gap; also keeps subnormals out of the division
        a[p, q] = a[q, p] = 0.0
        return
    phase = complex(apq.real / r, apq.imag / r)
    theta = (a[q, q].real - a[p, p].real) / (2.0 * r)
    if abs(theta) > 1e150:
        t = 0.5 / theta
    else:
        t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
        if theta < 0.0:
            t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    # phase fix on column q followed by a real Givens rotation in the (p, q) plane
    ph = phase.conjugate()
    cp, cq = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * cp - s * ph * cq
    a[:, q] = s * cp + c * ph * cq
    rp, rq = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c * rp - s * phase * rq
    a[q, :] = s * rp + c * phase * rq
    vp, vq = v[:, p].copy(), v[:, q].copy()
    v[:, p] = c * vp - s * ph * vq
    v[:, q] = s * vp + c * ph * vq
    a[p, q] = a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real


def eig_hermitian(m, vectors: bool = False):
    """Eigenvalues of a Hermitian matrix in ascending order (cyclic Jacobi).

    With ``vectors=True`` returns ``(w, V)`` where the columns of ``V`` are
    orthonormal eigenvectors and ``m = V diag(w) V^H``.
    """
    a = np.array(_as_array(m), dtype=np.complex128, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    defect = _hermiticity_defect(a)
    if defect > EIG_INPUT_TOL:
        raise ValueError(f"matrix is not Hermitian (max |m - m^H| = {defect:.3e})")
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)

    scale = float(np.linalg.norm(a))
    negligible = np.finfo(float).eps ** 2 * scale
    for _ in range(JACOBI_MAX_SWEEPS):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= JACOBI_TOL * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] != 0.0:
                    _jacobi_rotate(a, v, p, q, negligible)
    else:
        raise RuntimeError("Jacobi eigensolver did not converge")

    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    w = w[order]
    if vectors:
        return w, v[:, order]
    return w


def trace_norm(m) -> float:
    """Sum of absolute eigenvalues."""
    return float(np.sum(np.abs(eig_hermitian(m))))
