"""Entanglement distillability of Dirac-field Werner states under the Hawking effect."""

from .analysis import (
    PTSpectrum,
    ThresholdResult,
    log_negativity,
    pt_eigs_generic,
    pt_eigs_maximal,
    pt_spectrum_numeric,
    threshold_closed_form,
    threshold_root_find,
)
from .channel import (
    ChannelCoefficients,
    HawkingParams,
    coefficients,
    dilate_rob_mode,
    hawking_channel,
    rob_isometry,
)
from .states import MAXIMAL_ALPHA, WernerParams, bell_state, werner_state
from .tensor import (
    DensityMatrix,
    HermitianMatrix,
    eig_hermitian,
    kron,
    partial_trace,
    partial_transpose,
    trace_norm,
)

__version__ = "0.1.0"
