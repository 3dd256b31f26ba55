"""Center conditions for Abel equations ``x' = f(t) x^3 + g(t) x^2``.

Exact rational computation of moments, return-map series, composition
witnesses and sign-change data, plus a floating-point integrator used as an
independent check.
"""

__version__ = "0.1.0"

from .errors import (
    AbelError,
    BlowUp,
    DegreeMismatch,
    DomainError,
    HypothesisFailed,
    InternalCheckFailed,
    InvalidKind,
    Mismatch,
    NoFactor,
    NonZeroMean,
    StepFailure,
    ZeroPolynomial,
)
from .exact import Poly
from .odeverify import cross_validate, displacement_scan, integrate_abel
from .pcc import PCCWitness, check_pcc, right_factor, verify_witness
from .planar import PlanarSystem, cherkas_reduce, trig_expand_homogeneous
from .returnmap import ReturnMapSeries, center_order, compute_return_series
from .signchange import even_odd_split, psi_eval, sturm_sign_changes, moment_propagation_check
from .system import AbelSystem, PiMultiple, moment, moment_linear_system, moment_report
from .trigpoly import TrigPoly

__all__ = [
    "AbelError", "AbelSystem", "BlowUp", "DegreeMismatch", "DomainError", "HypothesisFailed",
    "InternalCheckFailed", "InvalidKind", "Mismatch", "NoFactor", "NonZeroMean", "PCCWitness",
    "PiMultiple", "PlanarSystem", "Poly", "ReturnMapSeries", "StepFailure", "TrigPoly",
    "ZeroPolynomial", "center_order", "check_pcc", "cherkas_reduce", "compute_return_series",
    "cross_validate", "displacement_scan", "even_odd_split", "integrate_abel", "moment",
    "moment_linear_system", "moment_report", "psi_eval", "right_factor", "sturm_sign_changes",
    "moment_propagation_check", "trig_expand_homogeneous", "verify_witness",
]
