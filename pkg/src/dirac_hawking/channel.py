"""Hawking channel on Rob's mode.

A Kruskal vacuum seen from outside the horizon is a two-mode state of the
exterior (I) and interior (II) Schwarzschild regions:

    |0>_R -> cos_r |0>_I |0>_II + sin_r |1>_I |1>_II
    |1>_R -> |1>_I |0>_II

with ``cos_r = (exp(-omega/T) + 1)**-0.5`` and ``sin_r = (exp(omega/T) + 1)**-0.5``.
Rob only has access to region I, so region II is traced out afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .tensor import DensityMatrix, partial_trace

# beyond this exp(omega/T) overflows a double
_OVERFLOW_RATIO = 700.0


@dataclass(frozen=True)
class HawkingParams:
    """Mode frequency and Hawking temperature in natural units.

    Give exactly one of ``temperature`` or ``mass``; the mass is converted
    with ``T = 1 / (8 pi M)``.  ``temperature=0`` is the inertial limit and
    ``temperature=math.inf`` the infinite-temperature limit.
    """

    omega: float
    temperature: float | None = None
    mass: float | None = None

    def __post_init__(self):
        omega = float(self.omega)
        if not (omega > 0.0 and math.isfinite(omega)):
            raise ValueError(f"omega must be a positive finite number, got {self.omega!r}")
        object.__setattr__(self, "omega", omega)

        if self.temperature is not None and self.mass is not None:
            raise ValueError("give either temperature or mass, not both")
        if self.mass is not None:
            mass = float(self.mass)
            if not mass > 0.0:
                raise ValueError(f"mass must be positive, got {self.mass!r}")
            object.__setattr__(self, "mass", mass)
            object.__setattr__(self, "temperature", 1.0 / (8.0 * math.pi * mass))
        elif self.temperature is not None:
            T = float(self.temperature)
            if not T >= 0.0:
                raise ValueError(f"temperature must be >= 0, got {self.temperature!r}")
            object.__setattr__(self, "temperature", T)
        else:
            raise ValueError("one of temperature or mass is required")

    @property
    def ratio(self) -> float:
        """``omega / T``; infinite at ``T = 0``."""
        if self.temperature == 0.0:
            return math.inf
        return self.omega / self.temperature


@dataclass(frozen=True)
class ChannelCoefficients:
    cos_r: float
    sin_r: float


def coefficients(p: HawkingParams) -> ChannelCoefficients:
    x = p.ratio
    if math.isinf(x):
        return ChannelCoefficients(1.0, 0.0)
    cos_r = 1.0 / math.sqrt(1.0 + math.exp(-x))
    if x > _OVERFLOW_RATIO:
        sin_r = math.exp(-0.5 * x) * cos_r
    else:
        sin_r = 1.0 / math.sqrt(1.0 + math.exp(x))
    return ChannelCoefficients(cos_r, sin_r)


def rob_isometry(p: HawkingParams) -> np.ndarray:
    """4x2 isometry from Rob's mode into region I (x) region II."""
    c = coefficients(p)
    v = np.zeros((4, 2), dtype=np.complex128)
    v[0, 0] = c.cos_r
    v[3, 0] = c.sin_r
    v[2, 1] = 1.0
    return v


def dilate_rob_mode(rho_AR: DensityMatrix, p: HawkingParams) -> DensityMatrix:
    """Joint Alice / region I / region II state, dims ``(2, 2, 2)``."""
    if tuple(rho_AR.dims) != (2, 2):
        raise ValueError(f"expected a two-qubit state with dims (2, 2), got {rho_AR.dims}")
    w = np.kron(np.eye(2), rob_isometry(p))
    out = w @ rho_AR.data @ w.conj().T
    out = 0.5 * (out + out.conj().T)
    return DensityMatrix(out, (2, 2, 2))


def hawking_channel(rho_AR: DensityMatrix, p: HawkingParams) -> DensityMatrix:
    """Alice / region I state after tracing out the black-hole interior."""
    return partial_trace(dilate_rob_mode(rho_AR, p), 2)
