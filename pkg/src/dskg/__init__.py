"""Klein-Gordon equation in de Sitter space: kernels, solutions and estimates.

The operator is S = d_t^2 - e^(-2t) Laplacian + M^2.  Solutions are
built from closed-form kernels involving the Gauss hypergeometric
function, checked against independent reference solvers, and measured
against decay envelopes.
"""

from .errors import (DSKGError, DomainError, NumericalError, OutsideCone, QuadratureFailure,
                     RealnessViolation, UnknownPreset, UnsupportedNorm, ValidationError)
from .hypergeom import gauss_2f1, hyp2f1_array
from .io import VERSION as __version__
from .kernels import CurvedMass, KernelPoint, evaluate_E, evaluate_K0, evaluate_K1, kernel_E, riemann_R
from .cauchy import CauchyData1D, solve_1d, solve_homogeneous_1d, solve_source_1d
from .spherical import CauchyDataND, solve_homogeneous_nd, solve_source_nd
from .presets import PRESETS, preset_data
from .estimates import EstimateConfig, check_decay_1d, check_decay_nd, lemma_bound_checks, lq_norm

__all__ = [
    "DSKGError", "DomainError", "NumericalError", "OutsideCone", "QuadratureFailure", "RealnessViolation",
    "UnknownPreset", "UnsupportedNorm", "ValidationError", "gauss_2f1", "hyp2f1_array", "CurvedMass",
    "KernelPoint", "evaluate_E", "evaluate_K0", "evaluate_K1", "kernel_E", "riemann_R", "CauchyData1D",
    "solve_1d", "solve_homogeneous_1d", "solve_source_1d", "CauchyDataND", "solve_homogeneous_nd",
    "solve_source_nd", "PRESETS", "preset_data", "EstimateConfig", "check_decay_1d", "check_decay_nd",
    "lemma_bound_checks", "lq_norm", "__version__",
]
