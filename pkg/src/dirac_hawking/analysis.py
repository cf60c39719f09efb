"""Partial-transpose spectra, logarithmic negativity and the distillability threshold.

Two independent routes are provided for every spectral quantity: a numeric
one (build the state, run the channel, diagonalise the partial transpose)
and a closed-form one.  For two qubits a negative partial-transpose
eigenvalue is equivalent to distillable entanglement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import HawkingParams, coefficients, hawking_channel
from .states import WernerParams, werner_state
from .tensor import DensityMatrix, eig_hermitian, partial_transpose

ENTANGLEMENT_TOL = 1e-10
XI_TOL = 1e-12
BISECTION_TOL = 1e-10


@dataclass(frozen=True)
class PTSpectrum:
    eigenvalues: tuple[float, ...]
    min_eigenvalue: float
    entangled: bool
    negativity_log2: float


@dataclass(frozen=True)
class ThresholdResult:
    tau: float
    method: str
    residual: float


def _require_two_qubits(rho: DensityMatrix) -> None:
    if tuple(rho.dims) != (2, 2):
        raise ValueError(f"expected a two-qubit state with dims (2, 2), got {rho.dims}")


def _log2_norm_ratio(w: np.ndarray) -> float:
    # ||X||_1 / tr X, so a PPT state gives exactly 0 rather than rounding noise
    return max(0.0, math.log2(float(np.sum(np.abs(w))) / float(np.sum(w))))


def pt_spectrum_numeric(rho: DensityMatrix) -> PTSpectrum:
    """Spectrum of the partial transpose over the second subsystem."""
    _require_two_qubits(rho)
    w = eig_hermitian(partial_transpose(rho, 1))
    lo = float(w[0])
    return PTSpectrum(
        eigenvalues=tuple(float(v) for v in w),
        min_eigenvalue=lo,
        entangled=lo < -ENTANGLEMENT_TOL,
        negativity_log2=_log2_norm_ratio(w),
    )


def log_negativity(rho: DensityMatrix) -> float:
    """``log2 ||rho^T_B||_1``; zero exactly when the partial transpose is PSD."""
    return pt_spectrum_numeric(rho).negativity_log2


def _squared_coefficients(omega: float, T: float) -> tuple[float, float]:
    c = coefficients(HawkingParams(omega, temperature=T))
    return c.cos_r**2, c.sin_r**2


def pt_eigs_maximal(F: float, omega: float, T: float) -> tuple[float, float, float, float]:
    """Closed-form PT eigenvalues for the maximal-Bell Werner state.

    The square root is taken of ``(4F-1)^2 cos_r^2 + 9 sin_r^4 / 4``, which is
    regular at ``F = 1/4``.  The last entry is the one that can go negative.
    """
    F = WernerParams(F).F
    c2, s2 = _squared_coefficients(omega, T)
    k = 4.0 * F - 1.0
    lam1 = (1.0 + 2.0 * F) * c2 / 6.0
    lam2 = (1.0 + 2.0 * F) / 6.0 + (1.0 - F) * s2 / 3.0
    centre = (1.0 - F) / 3.0 + k * s2 / 12.0
    spread = math.sqrt(k * k * c2 + 2.25 * s2 * s2) / 6.0
    return lam1, lam2, centre + spread, centre - spread


def pt_eigs_generic(F: float, alpha: float, omega: float, T: float) -> tuple[float, float, float, float]:
    """Closed-form PT eigenvalues for the Werner state over generic Bell states."""
    p = WernerParams(F, alpha)
    F, a2 = p.F, p.alpha**2
    b2, _ = _squared_coefficients(omega, T)
    s2 = 1.0 - b2
    lam1 = (1.0 + 2.0 * F) * a2 / 3.0 + 2.0 * a2 * (1.0 - F) * s2 / 3.0
    lam2 = (1.0 - a2) * (1.0 + 2.0 * F) * b2 / 3.0
    xi = (
        9.0 * (a2 - 1.0) ** 2
        - 2.0 * b2 * (a2 - 1.0) * ((4.0 * F - 1.0) * (8.0 * F + 1.0) * a2 - 6.0 * F - 3.0)
        + b2 * b2 * (1.0 + a2 + F * (2.0 - 4.0 * a2)) ** 2
    )
    if xi < -XI_TOL:
        raise RuntimeError(f"discriminant is negative ({xi:.3e}) at F={F}, alpha={p.alpha}")
    root = math.sqrt(max(xi, 0.0))
    centre = 3.0 - 3.0 * a2 + b2 * (-2.0 * F - 1.0 + 3.0 * a2)
    return lam1, lam2, (centre + root) / 6.0, (centre - root) / 6.0


def threshold_closed_form(omega: float, T: float) -> ThresholdResult:
    """Werner weight above which the channel output stays entangled.

    ``tau = (3 e^x + 5) / (6 e^x + 8)`` with ``x = omega / T``; the same value
    holds for every Bell amplitude ``alpha``.  Runs from 1/2 at ``T = 0`` to
    4/7 as ``T -> inf``.
    """
    x = HawkingParams(omega, temperature=T).ratio
    if math.isinf(x):
        tau = 0.5
    else:
        ex = math.exp(-x)
        tau = (3.0 + 5.0 * ex) / (6.0 + 8.0 * ex)
    residual = min(pt_eigs_maximal(tau, omega, T))
    return ThresholdResult(tau, "closed-form", residual)


def min_pt_eigenvalue(F: float, alpha: float, p: HawkingParams) -> float:
    rho = hawking_channel(werner_state(WernerParams(F, alpha)), p)
    return pt_spectrum_numeric(rho).min_eigenvalue


def threshold_root_find(alpha: float, omega: float, T: float, tol: float = BISECTION_TOL) -> ThresholdResult:
    """Bisection in ``F`` for the sign change of the numeric minimum PT eigenvalue."""
    p = HawkingParams(omega, temperature=T)
    lo, hi = 0.0, 1.0
    g_lo = min_pt_eigenvalue(lo, alpha, p)
    g_hi = min_pt_eigenvalue(hi, alpha, p)
    if not (g_lo >= 0.0 > g_hi):
        raise RuntimeError(
            f"no sign change of the minimum PT eigenvalue on F in [0, 1] "
            f"(g(0)={g_lo:.3e}, g(1)={g_hi:.3e})"
        )
    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        if min_pt_eigenvalue(mid, alpha, p) < 0.0:
            hi = mid
        else:
            lo = mid
    tau = 0.5 * (lo + hi)
    return ThresholdResult(tau, "root-find", min_pt_eigenvalue(tau, alpha, p))
