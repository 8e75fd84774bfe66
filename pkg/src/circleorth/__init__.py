"""OPUC and first-class orthogonal Laurent polynomials on the unit circle."""
from .algebra import LaurentPolynomial
from .analytic import (SchurState, SzegoData, asymptotic_diagnostics, caratheodory,
                       geronimus_otp_check, schur_iterate, szego_function)
from .bridge import BridgeContext, build_context, bridge_report, opuc_to_otp, otp_to_opuc
from .catalog import measure_catalog
from .errors import (AdmissibilityError, InsufficientMomentsError, MeasureError,
                     SzegoConditionError, TrivialMeasureError)
from .favard import (SevenSeq, TripleSeq, bernstein_szego_otp_form, strong_favard, validate,
                     weak_favard)
from .measure import (CircleMeasure, acceptance_suite, bernstein_szego, fourier, geometric,
                      measure_from_dict, uniform, uniform_plus_atoms)
from .opuc import OpucSystem, build_opuc
from .otp import OtpSystem, build_otp
from .report import IdentityResult, ResidualReport
from .rhp import RhpSolution, build_opuc_rhp, build_otp_rhp, cauchy_transform, hilbert_transform

__all__ = [
    "AdmissibilityError", "BridgeContext", "CircleMeasure", "IdentityResult", "InsufficientMomentsError",
    "LaurentPolynomial", "MeasureError", "OpucSystem", "OtpSystem", "ResidualReport", "RhpSolution",
    "SchurState", "SevenSeq", "SzegoConditionError", "SzegoData", "TripleSeq", "TrivialMeasureError",
    "acceptance_suite", "asymptotic_diagnostics", "bernstein_szego", "bernstein_szego_otp_form",
    "bridge_report", "build_context", "build_opuc", "build_opuc_rhp", "build_otp", "build_otp_rhp",
    "caratheodory", "cauchy_transform", "fourier", "geometric", "geronimus_otp_check",
    "hilbert_transform", "measure_catalog", "measure_from_dict", "opuc_to_otp", "otp_to_opuc",
    "schur_iterate", "strong_favard", "szego_function", "uniform", "uniform_plus_atoms", "validate",
    "weak_favard",
]
