"""Large-``n`` behaviour of Bessel derivatives at a fixed point ``a > 0``.

For integer order ``nu`` the derivatives of ``J_nu`` have the expansion::

    J_nu^(n)(a) ~ sqrt(2/(pi n)) Lambda(n) {cos(Phi) sum_k C_k n^-k
                                            + sin(Phi) sum_{k>=1} D_k n^-k}

with ``Phi = pi n/2 + a - pi nu/2`` and ``Lambda(n) = n! e^n n^(-n-1/2) / sqrt(2 pi)``.
``C_k``, ``D_k`` are built from the steepest-descent constants ``B_r(k)`` of
the saddle at ``w = -i`` and the Hankel coefficients ``c_k(nu)``; only the
values needed for ``k <= 2`` are carried.

Non-integer orders (and ``K``) grow factorially; for those only order
estimates ``n! a^-n n^-p`` are available, exposed through :class:`Envelope`.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exceptions import DomainError
from .hiord import DerivativeResult, Method
from .signedlog import SignedLog
from .specfun import BesselKind, bessel, ln_gamma_signed

__all__ = [
    "SteepestDescentConstants",
    "STEEPEST_DESCENT",
    "JAsymptoticCoeffs",
    "EnvelopeForm",
    "Envelope",
    "BoundCheck",
    "BoundReport",
    "pochhammer_c",
    "stirling_lambda",
    "j_asymptotic_coeffs",
    "jn_deriv_asymptotic",
    "envelope",
    "envelope_value",
    "in_deriv_asymptotic",
    "validate_bounds",
]


@dataclass(frozen=True)
class SteepestDescentConstants:
    """Saddle-point data for ``psi(w) = i w - log w`` at ``w_s = -i``.

    ``Psi_n`` are ``psi^(n)(w_s) / psi''(w_s)``; ``B1_0``, ``B1_1``, ``B2_0``
    are the first correction coefficients ``B_r(k)`` (``B_0(k) = 1``).
    """

    psi_s: complex = complex(1.0, 0.5 * math.pi)
    psi2_s: float = -1.0
    Psi3: complex = -2j
    Psi4: complex = -6
    Psi5: complex = 24j
    Psi6: complex = 120
    B0: Fraction = Fraction(1)
    B1_0: Fraction = Fraction(-11, 24)
    B1_1: Fraction = Fraction(-47, 24)
    B2_0: Fraction = Fraction(265, 1152)


STEEPEST_DESCENT = SteepestDescentConstants()


def pochhammer_c(k: int, nu: float) -> float:
    """Hankel coefficient ``c_k(nu) = (-1)^k (1/2+nu)_k (1/2-nu)_k / (2^k k!)``."""
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    value = 1.0
    for j in range(k):
        value *= -(0.5 + nu + j) * (0.5 - nu + j) / (2.0 * (j + 1))
    return value


def stirling_lambda(n: int) -> float:
    """``Lambda(n) = n! e^n n^(-n-1/2) / sqrt(2 pi)``, evaluated in log space."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    log_val = ln_gamma_signed(n + 1.0).log_abs + n - (n + 0.5) * math.log(n) - 0.5 * math.log(2 * math.pi)
    return math.exp(log_val)


@dataclass(frozen=True)
class JAsymptoticCoeffs:
    nu: int
    a: float
    c1: float
    c2: float
    C: tuple[float, float, float]
    D: tuple[float, float, float]

    def phase(self, n: int) -> float:
        """``Phi(n) = pi n / 2 + a - pi nu / 2``."""
        return 0.5 * math.pi * n + self.a - 0.5 * math.pi * self.nu

    def lam(self, n: int) -> float:
        return stirling_lambda(n)


def j_asymptotic_coeffs(nu: int, a: float) -> JAsymptoticCoeffs:
    if nu < 0 or float(nu) != int(nu):
        raise DomainError(f"expansion needs a non-negative integer order, got {nu}")
    if not a > 0:
        raise DomainError(f"a must be positive, got {a}")
    sd = STEEPEST_DESCENT
    c1, c2 = pochhammer_c(1, nu), pochhammer_c(2, nu)
    b10, b11, b20 = float(sd.B1_0), float(sd.B1_1), float(sd.B2_0)
    C = (1.0, b10 - c1, b20 - c1 * b11 + c2 - 0.375 * a * a)
    D = (0.0, 0.5 * a, 0.5 * a * (b11 - 3.0 * c1))
    return JAsymptoticCoeffs(int(nu), float(a), c1, c2, C, D)


def jn_deriv_asymptotic(nu: int, a: float, n: int, k_max: int = 2) -> DerivativeResult:
    """Large-``n`` approximation to ``J_nu^(n)(a)`` truncated after ``n^-k_max``.

    ``est_abs_err`` is the phase-free size of the first omitted correction,
    ``(|C_{k+1}| + |D_{k+1}|) n^-(k+1)``.  ``C_3``, ``D_3`` are not carried, so
    for ``k_max = 2`` their size is extrapolated geometrically from orders 1
    and 2.
    """
    if k_max not in (0, 1, 2):
        raise DomainError(f"k_max must be 0, 1 or 2, got {k_max}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    co = j_asymptotic_coeffs(nu, a)
    phi = co.phase(n)
    cp, sp = math.cos(phi), math.sin(phi)
    pref = math.sqrt(2.0 / (math.pi * n)) * co.lam(n)
    s = cp * sum(co.C[k] / n ** k for k in range(k_max + 1))
    s += sp * sum(co.D[k] / n ** k for k in range(1, k_max + 1))
    size = [abs(co.C[k]) + abs(co.D[k]) for k in range(3)]
    if k_max < 2:
        omitted = size[k_max + 1] / n ** (k_max + 1)
    else:
        omitted = size[2] * size[2] / size[1] / n ** 3
    value = pref * s
    return DerivativeResult(BesselKind.J, float(nu), float(a), n, SignedLog.from_real(value),
                            Method.asymptotic, pref * omitted)


def in_deriv_asymptotic(m: int, a: float, n: int) -> DerivativeResult:
    """Leading large-``n`` form of ``I_m^(n)(a)``: ``(e^a + (-1)^(m+n) e^-a) / sqrt(2 pi n)``.

    ``a = 0`` is accepted as the limiting case.
    """
    if m < 0 or float(m) != int(m):
        raise DomainError(f"m must be a non-negative integer, got {m}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if a < 0:
        raise DomainError(f"a must be non-negative, got {a}")
    sign = 1.0 if (int(m) + n) % 2 == 0 else -1.0
    value = (math.exp(a) + sign * math.exp(-a)) / math.sqrt(2 * math.pi * n)
    # relative correction is O(1/n)
    return DerivativeResult(BesselKind.I, float(m), float(a), n, SignedLog.from_real(value),
                            Method.asymptotic, abs(value) * (1.0 + a * a) / n)


# ---------------------------------------------------------------------------
# order-estimate envelopes
# ---------------------------------------------------------------------------

class EnvelopeForm(str, enum.Enum):
    factorial_power = "factorial_power"
    power_only = "power_only"
    i_form = "i_form"


@dataclass(frozen=True)
class Envelope:
    kind: BesselKind
    nu: float
    a: float
    form: EnvelopeForm
    p: float


def envelope(kind, nu: float, a: float) -> Envelope:
    """Growth law of ``|kind_nu^(n)(a)|`` as ``n -> infinity``.

    ``J`` non-integer: ``n! a^-n n^-(1+nu)``; ``J`` integer: ``n^-1/2``;
    ``K`` (``0 <= nu < 1``): ``n! a^-n n^-(1-nu)``; ``I`` integer: the
    two-exponential form ``(e^a + e^-a) / sqrt(2 pi n)``.
    """
    kind = BesselKind.coerce(kind)
    if not a > 0:
        raise DomainError(f"a must be positive, got {a}")
    integer = float(nu).is_integer()
    if kind is BesselKind.J:
        if nu < 0:
            raise DomainError(f"J envelope needs nu >= 0, got {nu}")
        if integer:
            return Envelope(kind, nu, a, EnvelopeForm.power_only, 0.5)
        return Envelope(kind, nu, a, EnvelopeForm.factorial_power, 1.0 + nu)
    if kind is BesselKind.K:
        if not 0 <= nu < 1:
            raise DomainError(f"K envelope needs 0 <= nu < 1, got {nu}")
        return Envelope(kind, nu, a, EnvelopeForm.factorial_power, 1.0 - nu)
    if kind is BesselKind.I and integer and nu >= 0:
        return Envelope(kind, nu, a, EnvelopeForm.i_form, 0.5)
    raise DomainError(f"no order estimate available for {kind.value}_{nu}")


def envelope_value(env: Envelope, n: int) -> SignedLog:
    """Evaluate the envelope magnitude at ``n`` in log space.

    The ``cos(Phi)`` factor of the integer-``J`` law is an oscillation,
    not part of the magnitude, and is left out.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if env.form is EnvelopeForm.factorial_power:
        return SignedLog(1, math.lgamma(n + 1.0) - n * math.log(env.a) - env.p * math.log(n))
    if env.form is EnvelopeForm.power_only:
        return SignedLog(1, -env.p * math.log(n))
    return SignedLog(1, env.a - 0.5 * math.log(2 * math.pi * n))


# ---------------------------------------------------------------------------
# inequality validators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundCheck:
    """One inequality ``lower <= value <= upper`` at a single point.

    ``slack_lower = value - lower``, ``slack_upper = upper - value``, both
    relative to ``|value|``; ``ok`` allows ``-tol`` on either side.
    """

    name: str
    nu: float
    x: float
    lower: float
    value: float
    upper: float
    slack_lower: float
    slack_upper: float
    ok: bool


@dataclass(frozen=True)
class BoundReport:
    nu: float
    checks: tuple[BoundCheck, ...]
    tol: float

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[BoundCheck]:
        return [c for c in self.checks if not c.ok]


def _check(name, nu, x, lower, value, upper, tol) -> BoundCheck:
    scale = abs(value) if value else 1.0
    sl = (value - lower) / scale if lower is not None else math.inf
    su = (upper - value) / scale if upper is not None else math.inf
    return BoundCheck(name, nu, x,
                      -math.inf if lower is None else lower, value,
                      math.inf if upper is None else upper,
                      sl, su, sl >= -tol and su >= -tol)


def validate_bounds(nu: float, grid: Sequence[float], tol: float = 1e-12,
                    kinds: Sequence[str] = ("K", "I"), variant: str = "printed") -> BoundReport:
    """Check the elementary inequalities for ``K_nu`` and ``I_nu`` on ``grid``.

    ``variant="printed"`` tests the inequalities in their published form:

    * ``K``, ``nu > 0``:  ``2^(nu-1) Gamma(nu) e^-x <= x^nu K_nu(x) <= 2^(nu-1) Gamma(nu)``
    * ``K``, ``nu = 0``:  ``K_0(x) <= sqrt(2/(pi x)) e^-x``
    * ``I``, ``nu >= 0``: ``2^-nu / Gamma(1+nu) <= x^-nu I_nu(x) <= 2^-nu e^x / Gamma(1+nu)``

    Two of these do not hold as printed.  ``x^nu e^x K_nu(x)`` is increasing
    for ``nu > 1/2`` and decreasing for ``nu < 1/2``, so the ``K`` lower bound
    is valid only for ``nu >= 1/2`` (it flips into an upper bound below), and
    the ``K_0`` constant should be ``sqrt(pi/(2x))``.  ``variant="corrected"``
    checks those repaired forms instead.

    Comparisons are non-strict with relative tolerance ``tol``: at
    ``nu = 1/2`` the lower ``K`` bound is attained exactly.
    """
    if variant not in ("printed", "corrected"):
        raise ValueError(f"unknown variant {variant!r}")
    if not grid:
        raise DomainError("grid must be non-empty")
    if any(not x > 0 for x in grid):
        raise DomainError("grid points must be positive")
    corrected = variant == "corrected"
    kinds = [BesselKind.coerce(k) for k in kinds]
    checks = []
    for kind in kinds:
        if kind is BesselKind.K:
            if nu < 0:
                raise DomainError(f"K bounds need nu >= 0, got {nu}")
            for x in grid:
                k = bessel(BesselKind.K, nu, x).to_real()
                if nu == 0:
                    c0 = math.pi / 2 if corrected else 2 / math.pi
                    checks.append(_check("K0_upper", nu, x, None, k, math.sqrt(c0 / x) * math.exp(-x), tol))
                    continue
                c = 2.0 ** (nu - 1) * math.gamma(nu)
                scaled = x ** nu * k
                if corrected and nu < 0.5:
                    checks.append(_check("K_two_sided", nu, x, None, scaled, c * math.exp(-x), tol))
                else:
                    checks.append(_check("K_two_sided", nu, x, c * math.exp(-x), scaled, c, tol))
        elif kind is BesselKind.I:
            if nu < 0:
                raise DomainError(f"I bounds need nu >= 0, got {nu}")
            c = 2.0 ** (-nu) / math.gamma(1 + nu)
            for x in grid:
                i = bessel(BesselKind.I, nu, x).to_real()
                checks.append(_check("I_two_sided", nu, x, c, x ** (-nu) * i, c * math.exp(x), tol))
        else:
            raise DomainError(f"no bounds implemented for {kind.value}")
    return BoundReport(nu, tuple(checks), tol)
