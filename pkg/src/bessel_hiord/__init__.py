"""High-order derivatives of Bessel functions and exponentially small tails of
incomplete Laplace transforms ``int_0^a e^{-xt} f_nu(t) dt``."""

__version__ = "0.1.0"

from .exceptions import AccuracyWarning, ConvergenceError, DomainError, PoleError
from .signedlog import SignedLog, signed_log_sum
from .specfun import (
    BesselKind,
    GammaPair,
    bessel,
    bessel_at_zero,
    bessel_value,
    incomplete_gamma,
    ln_gamma_signed,
    log_binomial,
)
from .hiord import DerivativeResult, Method, TaylorStream, deriv_exact, derivative_stream, taylor_stream
from .asymptotics import (
    Envelope,
    EnvelopeForm,
    JAsymptoticCoeffs,
    STEEPEST_DESCENT,
    envelope,
    envelope_value,
    in_deriv_asymptotic,
    j_asymptotic_coeffs,
    jn_deriv_asymptotic,
    pochhammer_c,
    stirling_lambda,
    validate_bounds,
)
from .transforms import (
    SeriesEval,
    SeriesMode,
    TransformQuery,
    TransformResult,
    closed_inf,
    convergent_sum,
    evaluate,
    hadamard_tail,
    poincare_tail,
    quadrature_oracle,
    quadrature_tail_oracle,
    remainder_bound,
)

__all__ = [
    "__version__",
    "AccuracyWarning", "ConvergenceError", "DomainError", "PoleError",
    "SignedLog", "signed_log_sum",
    "BesselKind", "GammaPair", "bessel", "bessel_at_zero", "bessel_value", "incomplete_gamma",
    "ln_gamma_signed", "log_binomial",
    "DerivativeResult", "Method", "TaylorStream", "deriv_exact", "derivative_stream", "taylor_stream",
    "Envelope", "EnvelopeForm", "JAsymptoticCoeffs", "STEEPEST_DESCENT", "envelope", "envelope_value",
    "in_deriv_asymptotic", "j_asymptotic_coeffs", "jn_deriv_asymptotic", "pochhammer_c",
    "stirling_lambda", "validate_bounds",
    "SeriesEval", "SeriesMode", "TransformQuery", "TransformResult", "closed_inf", "convergent_sum",
    "evaluate", "hadamard_tail", "poincare_tail", "quadrature_oracle", "quadrature_tail_oracle",
    "remainder_bound",
    "DerivativeFeatures", "IncompleteLaplaceTransformer",
]

_LAZY = {"DerivativeFeatures", "IncompleteLaplaceTransformer"}


def __getattr__(name):
    # the estimators pull in scikit-learn; load them only on first use
    if name in _LAZY:
        from . import estimators
        return getattr(estimators, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
