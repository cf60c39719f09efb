"""Prepared two-mode states: Bell states and Werner mixtures over them."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .tensor import DensityMatrix

MAXIMAL_ALPHA = 1.0 / math.sqrt(2.0)

BELL_KINDS = ("phi+", "phi-", "psi+", "psi-")


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in the open interval (0, 1), got {alpha!r}")
    return alpha


@dataclass(frozen=True)
class WernerParams:
    """Werner mixing weight ``F`` in [0, 1] and Bell amplitude ``alpha`` in (0, 1)."""

    F: float
    alpha: float = MAXIMAL_ALPHA

    def __post_init__(self):
        F = float(self.F)
        if not 0.0 <= F <= 1.0:
            raise ValueError(f"F must lie in [0, 1], got {self.F!r}")
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "alpha", _check_alpha(self.alpha))


def _normalize_kind(kind: str) -> str:
    k = kind.replace("−", "-").replace("⁺", "+").lower()
    if k not in BELL_KINDS:
        raise ValueError(f"unknown Bell state kind {kind!r}; expected one of {BELL_KINDS}")
    return k


def bell_vector(kind: str, alpha: float = MAXIMAL_ALPHA) -> np.ndarray:
    """State vector ``alpha|00> +- beta|11>`` (phi) or ``alpha|01> +- beta|10>`` (psi)."""
    k = _normalize_kind(kind)
    alpha = _check_alpha(alpha)
    beta = math.sqrt(1.0 - alpha * alpha)
    sign = 1.0 if k.endswith("+") else -1.0
    vec = np.zeros(4, dtype=np.complex128)
    if k.startswith("phi"):
        vec[0], vec[3] = alpha, sign * beta
    else:
        vec[1], vec[2] = alpha, sign * beta
    return vec


def bell_state(kind: str, alpha: float = MAXIMAL_ALPHA) -> DensityMatrix:
    vec = bell_vector(kind, alpha)
    return DensityMatrix(np.outer(vec, vec.conj()), (2, 2))


def werner_state(p: WernerParams) -> DensityMatrix:
    """``F |psi-><psi-| + (1-F)/3 (|phi+><phi+| + |phi-><phi-| + |psi+><psi+|)``.

    All four projectors share the same ``alpha``.  Away from the maximal case
    the phi projectors are not orthogonal; the mixture is taken as written,
    without re-orthogonalisation.
    """
    rest = (1.0 - p.F) / 3.0
    weights = {"psi-": p.F, "phi+": rest, "phi-": rest, "psi+": rest}
    data = np.zeros((4, 4), dtype=np.complex128)
    for kind, w in weights.items():
        vec = bell_vector(kind, p.alpha)
        data += w * np.outer(vec, vec.conj())
    return DensityMatrix(data, (2, 2))
