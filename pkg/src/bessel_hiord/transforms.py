"""Incomplete Laplace transforms ``H(a, x) = int_0^a e^{-xt} f_nu(t) dt`` of Bessel functions.

Splitting at the upper limit::

    H(a, x) = H(inf, x) - e^{-ax} int_0^inf e^{-xu} f_nu(a + u) du

reduces the problem to a closed form plus an exponentially small tail.  The
tail integral is expanded with the Taylor coefficients of ``f_nu`` about
``a`` in one of three ways:

``poincare``
    ``sum f^(n)(a) / x^(n+1)``; divergent for non-integer order, truncated
    optimally.
``hadamard``
    ``sum f^(n)(a) / x^(n+1) P(n+1, ax)`` plus the discarded integral over
    ``u > a``, which is bounded but not evaluated.
``convergent``
    the Poincare sum itself, which converges for integer-order ``J`` and
    ``I`` when ``x > 1``.

``quadrature_oracle`` evaluates the defining integral directly and serves as
the independent check.
"""
from __future__ import annotations

import enum
import math
import sys
import warnings
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import AccuracyWarning, ConvergenceError, DomainError
from .hiord import DerivativeResult, derivative_stream
from .quadrature import tanh_sinh
from .signedlog import SignedLog
from .specfun import BesselKind, bessel_value, log_gamma_p, upper_gamma

__all__ = [
    "TransformQuery",
    "SeriesMode",
    "SeriesEval",
    "TransformResult",
    "closed_inf",
    "quadrature_oracle",
    "quadrature_tail_oracle",
    "hadamard_tail",
    "poincare_tail",
    "convergent_sum",
    "remainder_bound",
    "evaluate",
    "METHODS",
]

METHODS = ("poincare", "hadamard", "convergent", "quadrature", "auto")
_EPS = sys.float_info.epsilon
_NU_SMALL = 1e-4
_X_NEAR_ONE = 1e-6
_DEFAULT_N_MAX = 400


@dataclass(frozen=True)
class TransformQuery:
    """``int_0^a e^{-xt} kind_nu(t) dt`` with its domain constraints checked up front."""

    kind: BesselKind
    nu: float
    a: float
    x: float

    def __post_init__(self):
        object.__setattr__(self, "kind", BesselKind.coerce(self.kind))
        object.__setattr__(self, "nu", float(self.nu))
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "x", float(self.x))
        self.kind.check_transform_order(self.nu)
        if not self.a > 0:
            raise DomainError(f"upper limit a must be positive, got {self.a}")
        if self.kind is BesselKind.I and not self.x > 1:
            raise DomainError(f"H_I needs x > 1, got {self.x}")
        if self.kind is BesselKind.K and not self.x >= 1:
            raise DomainError(f"H_K needs x >= 1, got {self.x}")
        if not self.x > 0:
            raise DomainError(f"transform variable x must be positive, got {self.x}")

    @property
    def ax(self) -> float:
        return self.a * self.x

    @property
    def integer_order(self) -> bool:
        return self.nu.is_integer()


class SeriesMode(str, enum.Enum):
    poincare_optimal = "poincare_optimal"
    poincare_fixed = "poincare_fixed"
    hadamard_smoothed = "hadamard_smoothed"
    convergent = "convergent"


@dataclass(frozen=True)
class SeriesEval:
    """Partial-sum trace of a tail series ``sum terms[n]``.

    ``value`` sums ``terms[0..truncation_index]``.  ``error_estimate`` is the
    mode's heuristic for the truncation error (the smallest term for
    ``poincare_optimal``, a rigorous geometric bound for ``convergent``).
    """

    terms: tuple[float, ...]
    truncation_index: int
    value: float
    smallest_term_index: int
    smallest_term: float
    mode: SeriesMode
    error_estimate: float
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class TransformResult:
    """``value = closed_inf - e^{-ax} tail.value``.

    ``remainder_bound`` bounds the contribution of the integral the series
    leaves out (already multiplied by ``e^{-ax}``); ``error_estimate`` covers
    series truncation and rounding.
    """

    query: TransformQuery
    method: str
    closed_inf: float
    tail: SeriesEval | None
    value: float
    remainder_bound: float
    error_estimate: float
    oracle_value: float | None = None
    oracle_error: float | None = None

    @property
    def deviation(self) -> float | None:
        if self.oracle_value is None:
            return None
        return abs(self.value - self.oracle_value)

    def consistent(self, slack: float = 1.0) -> bool:
        """``|value - oracle| <= remainder_bound + slack * error_estimate + oracle_error``."""
        if self.oracle_value is None:
            raise ValueError("no oracle value attached")
        allowed = self.remainder_bound + slack * self.error_estimate + (self.oracle_error or 0.0)
        return self.deviation <= allowed


# ---------------------------------------------------------------------------
# closed forms at infinite upper limit
# ---------------------------------------------------------------------------

def _sinh_ratio(nu: float, L: float) -> float:
    """``sinh(nu L) / sinh(L)``, continuous at ``L = 0``."""
    if abs(L) < 1e-8:
        return nu * (1.0 + (nu * nu - 1.0) * L * L / 6.0)
    return math.sinh(nu * L) / math.sinh(L)


def _pi_over_sinpi(nu: float) -> float:
    """``pi nu / sin(pi nu)``, continuous at ``nu = 0``."""
    if abs(nu) < _NU_SMALL:
        z = math.pi * nu
        return 1.0 + z * z / 6.0 + 7.0 * z ** 4 / 360.0
    return math.pi * nu / math.sin(math.pi * nu)


def closed_inf(kind, nu: float, x: float) -> float:
    """``H(inf, x) = int_0^inf e^{-xt} kind_nu(t) dt``.

    Written through ``M = asinh(x)`` (``J``, ``Y``) and ``L = acosh(x)``
    (``K``, ``I``) so that the removable singularities at ``nu -> 0`` and
    ``x -> 1`` are evaluated by their limits, e.g. ``H_K(inf, 1) = pi nu / sin(pi nu)``.
    """
    kind = BesselKind.coerce(kind)
    kind.check_transform_order(nu)
    if kind is BesselKind.J:
        if not x > 0:
            raise DomainError(f"x must be positive, got {x}")
        r = math.hypot(1.0, x)
        return math.exp(-nu * math.asinh(x)) / r
    if kind is BesselKind.Y:
        if not x > 0:
            raise DomainError(f"x must be positive, got {x}")
        r = math.hypot(1.0, x)
        M = math.asinh(x)
        # -[2 sinh(nu M) + 2 sin^2(pi nu/2) e^{-nu M}] / (sin(pi nu) r)
        if abs(nu) < _NU_SMALL:
            sinh_term = 2.0 * M / math.pi * (1.0 + nu * nu * M * M / 6.0) * _pi_over_sinpi(nu)
        else:
            sinh_term = 2.0 * math.sinh(nu * M) / math.sin(math.pi * nu)
        return -(sinh_term + math.tan(0.5 * math.pi * nu) * math.exp(-nu * M)) / r
    if kind is BesselKind.I:
        if not x > 1:
            raise DomainError(f"H_I(inf, x) needs x > 1, got {x}")
        s = math.sqrt((x - 1.0) * (x + 1.0))
        return math.exp(-nu * math.acosh(x)) / s
    # K: (pi / sin(pi nu)) sinh(nu L) / sinh(L)
    if x < 1:
        raise DomainError(f"H_K(inf, x) needs x >= 1, got {x}")
    L = math.log1p((x - 1.0) + math.sqrt((x - 1.0) * (x + 1.0)))
    if abs(x - 1.0) < _X_NEAR_ONE:
        ratio_over_nu = 1.0 + (nu * nu - 1.0) * L * L / 6.0
        return _pi_over_sinpi(nu) * ratio_over_nu
    if abs(nu) < _NU_SMALL:
        # sinh(nu L) / nu -> L
        return _pi_over_sinpi(nu) * L * (1.0 + nu * nu * L * L / 6.0) / math.sinh(L)
    return math.pi / math.sin(math.pi * nu) * _sinh_ratio(nu, L)


# ---------------------------------------------------------------------------
# quadrature oracle
# ---------------------------------------------------------------------------

def _integrand(query: TransformQuery):
    kind, nu, x = query.kind, query.nu, query.x
    return lambda t: math.exp(-x * t) * bessel_value(kind, nu, t) if t > 0 else 0.0


def quadrature_oracle(query: TransformQuery, abs_tol: float = 1e-15,
                      with_error: bool = False):
    """``int_0^a e^{-xt} kind_nu(t) dt`` by tanh-sinh quadrature."""
    if not abs_tol > 0:
        raise DomainError(f"abs_tol must be positive, got {abs_tol}")
    value, err = tanh_sinh(_integrand(query), 0.0, query.a, abs_tol=abs_tol, rel_tol=abs_tol)
    return (value, err) if with_error else value


def _growth_rate(query: TransformQuery) -> float:
    # |f(t)| <= C e^{g t} for t >= a
    return 1.0 if query.kind is BesselKind.I else 0.0


def quadrature_tail_oracle(query: TransformQuery, rel_tol: float = 1e-13) -> tuple[float, float]:
    """``e^{ax} int_a^inf e^{-xt} kind_nu(t) dt = int_0^inf e^{-xu} kind_nu(a+u) du`` by quadrature.

    This is ``e^{ax} (H(inf, x) - H(a, x))`` computed without the cancellation
    of the difference.  The range is cut at ``U`` with ``(x - g) U = 60``
    (``g`` = exponential growth rate of the integrand), far below ``rel_tol``.
    Returns ``(value, error_estimate)``.
    """
    g = _growth_rate(query)
    U = 60.0 / (query.x - g)
    kind, nu, a, x = query.kind, query.nu, query.a, query.x
    f = lambda u: math.exp(-x * u) * bessel_value(kind, nu, a + u)  # noqa: E731
    value, err = tanh_sinh(f, 0.0, U, abs_tol=1e-300, rel_tol=rel_tol)
    return value, err


# ---------------------------------------------------------------------------
# tail series
# ---------------------------------------------------------------------------

@lru_cache(maxsize=64)
def _derivs(kind: BesselKind, nu: float, a: float, n_max: int) -> tuple[DerivativeResult, ...]:
    return tuple(derivative_stream(kind, nu, a, n_max))


def _poincare_terms(query: TransformQuery, n_max: int) -> list[SignedLog]:
    lx = math.log(query.x)
    return [d.value.scale(-(n + 1) * lx) for n, d in enumerate(_derivs(query.kind, query.nu, query.a, n_max))]


def poincare_tail(query: TransformQuery, policy="optimal", n_max: int = _DEFAULT_N_MAX) -> SeriesEval:
    """Asymptotic tail ``sum f^(n)(a) / x^(n+1)``.

    ``policy="optimal"`` stops just before the smallest term, where term size
    is measured as ``max(|t_n|, |t_{n+1}|)`` so that an isolated zero of an
    oscillating derivative is not mistaken for the minimum.  ``policy`` may
    also be an integer ``N`` (sum ``n = 0..N``).
    """
    if policy == "optimal":
        terms = _poincare_terms(query, n_max)
        sizes = [max(terms[n].log_abs if terms[n].sign else -math.inf,
                     terms[n + 1].log_abs if terms[n + 1].sign else -math.inf)
                 for n in range(n_max)]
        m = min(range(n_max), key=sizes.__getitem__)
        flags = []
        used = terms[:m]
        value = math.fsum(t.to_real() for t in used)
        smallest = SignedLog(1, sizes[m]).to_real()
        if m >= n_max - 1:
            if smallest <= 1e-17 * abs(value):
                # terms still falling at the cap: a convergent series, not an asymptotic one
                flags.append("converged")
            else:
                flags.append("n_max_reached")
                warnings.warn(f"smallest Poincare term at the cap n_max={n_max}; asymptotic regime not reached",
                              AccuracyWarning, stacklevel=2)
        if query.x < 2.0 / query.a:
            flags.append("x_below_2_over_a")
        return SeriesEval(tuple(t.to_real() for t in terms[: m + 1]), m - 1, value, m, smallest,
                          SeriesMode.poincare_optimal, smallest, tuple(flags))
    N = int(policy)
    if N < 0:
        raise DomainError(f"fixed truncation index must be >= 0, got {N}")
    terms = _poincare_terms(query, N + 1)
    used = [t.to_real() for t in terms[: N + 1]]
    nxt = abs(terms[N + 1].to_real())
    sizes = [abs(t) for t in used]
    m = min(range(len(sizes)), key=sizes.__getitem__)
    return SeriesEval(tuple(used), N, math.fsum(used), m, sizes[m], SeriesMode.poincare_fixed, nxt)


def hadamard_tail(query: TransformQuery, n_max: int = _DEFAULT_N_MAX, rel_stop: float = 1e-18) -> SeriesEval:
    """Smoothed tail ``sum f^(n)(a) / x^(n+1) P(n+1, ax)``.

    Equals ``int_0^a e^{-xu} f(a+u) du`` summed term by term; stops at
    ``n_max`` or once a term falls below ``rel_stop`` times the running sum.
    The error estimate extrapolates the algebraic decay of the last terms.
    """
    if not query.ax > 0:
        raise DomainError("hadamard_tail needs ax > 0")
    derivs = _derivs(query.kind, query.nu, query.a, n_max)
    lx, ax = math.log(query.x), query.ax
    logs, terms = [], []
    running = 0.0
    for n, d in enumerate(derivs):
        if d.value.sign == 0:
            logs.append(-math.inf)
            terms.append(0.0)
            continue
        lt = d.value.log_abs - (n + 1) * lx + log_gamma_p(n + 1.0, ax)
        t = d.value.sign * math.exp(lt) if lt > -745 else 0.0
        logs.append(lt)
        terms.append(t)
        running += t
        if n >= ax and abs(t) < rel_stop * abs(running):
            break
    N = len(terms) - 1
    value = math.fsum(terms)
    m = min(range(len(terms)), key=lambda k: logs[k])
    est = _algebraic_tail_estimate(logs, N)
    return SeriesEval(tuple(terms), N, value, m, math.exp(logs[m]) if logs[m] > -745 else 0.0,
                      SeriesMode.hadamard_smoothed, est)


def _algebraic_tail_estimate(logs: list[float], N: int) -> float:
    """Remainder of a series whose terms decay like ``n^-q``, from the last terms."""
    if N < 8 or logs[N] == -math.inf:
        return 0.0 if logs[N] == -math.inf else math.exp(logs[N])
    half = N // 2
    # use max over a short window to damp sign-change zeros
    hi = max(logs[N - 3: N + 1])
    mid = max(logs[half - 3: half + 1])
    q = (mid - hi) / math.log(N / half)
    last = math.exp(hi) if hi > -745 else 0.0
    if q <= 1.05:
        return last * N * 20.0
    return last * N / (q - 1.0)


def convergent_sum(query: TransformQuery, rel_tol: float = 1e-14, n_start: int = 64,
                   n_cap: int = 6400) -> SeriesEval:
    """Sum ``f^(n)(a) / x^(n+1)`` to convergence for integer-order ``J`` or ``I`` with ``x > 1``.

    ``|J_m^(n)(a)| <= 1`` and ``|I_m^(n)(a)| <= e^a`` for every ``n``, so the
    remainder after ``N`` terms is at most ``M x^-(N+1) / (x - 1)``; that bound
    is the reported error estimate.
    """
    if query.kind not in (BesselKind.J, BesselKind.I) or not query.integer_order:
        raise DomainError("convergent expansion needs integer-order J or I")
    if not query.x > 1:
        raise DomainError(f"convergent expansion needs x > 1, got {query.x}")
    M = 1.0 if query.kind is BesselKind.J else math.exp(query.a)
    lx = math.log(query.x)
    n_max = n_start
    while True:
        terms = [t.to_real() for t in _poincare_terms(query, n_max)]
        value = 0.0
        for N, t in enumerate(terms):
            value += t
            bound = M * math.exp(-(N + 2) * lx) / (query.x - 1.0)
            if bound <= rel_tol * abs(value) and N >= 2:
                used = terms[: N + 1]
                value = math.fsum(used)
                sizes = [abs(v) for v in used]
                m = min(range(len(sizes)), key=sizes.__getitem__)
                return SeriesEval(tuple(used), N, value, m, sizes[m], SeriesMode.convergent, bound)
        if n_max >= n_cap:
            raise ConvergenceError(f"convergent sum not converged after {n_max} terms (x={query.x})")
        n_max *= 2


# ---------------------------------------------------------------------------
# discarded-integral bounds
# ---------------------------------------------------------------------------

def remainder_bound(query: TransformQuery) -> float:
    """Bound on ``|int_a^inf e^{-xu} f_nu(a+u) du|``, the integral left out of the Hadamard sum.

    * ``J``: ``|J_nu| <= 1`` gives ``e^{-ax} / x``.
    * ``K``, ``nu > 0``: ``t^nu K_nu(t) < 2^(nu-1) Gamma(nu)`` gives
      ``2^(nu-1) Gamma(nu) x^(nu-1) Gamma(1-nu, ax)``.
    * ``K_0``: ``K_0(t) < sqrt(pi/(2t)) e^-t`` gives
      ``sqrt(pi/(4a)) e^{-a} e^{-(x+1)a} / (x+1)``.
    * ``Y``: the modulus ``sqrt(J_nu^2 + Y_nu^2)`` decreases in ``t``, so
      ``|Y_nu(t)| <= sqrt(J_nu^2 + Y_nu^2)(2a)`` for ``t >= 2a``.
    * ``I``, ``nu >= 0``: ``I_nu(t) <= I_0(t) <= e^t`` gives ``e^{-(x-2)a} / (x-1)``.
    """
    a, x, nu = query.a, query.x, query.nu
    kind = query.kind
    if kind is BesselKind.J:
        return math.exp(-a * x) / x
    if kind is BesselKind.K:
        if nu == 0:
            return math.sqrt(math.pi / (4.0 * a)) * math.exp(-a - (x + 1.0) * a) / (x + 1.0)
        return 2.0 ** (nu - 1.0) * math.gamma(nu) * x ** (nu - 1.0) * upper_gamma(1.0 - nu, a * x)
    if kind is BesselKind.Y:
        j = bessel_value(BesselKind.J, nu, 2 * a)
        y = bessel_value(BesselKind.Y, nu, 2 * a)
        return math.hypot(j, y) * math.exp(-a * x) / x
    return math.exp(-(x - 2.0) * a) / (x - 1.0)


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------

def _auto_method(query: TransformQuery) -> str:
    if query.integer_order and query.kind in (BesselKind.J, BesselKind.I) and query.x > 1:
        return "convergent"
    return "poincare"


def evaluate(query: TransformQuery, method: str = "auto", with_oracle: bool = False,
             n_max: int = _DEFAULT_N_MAX, oracle_tol: float = 1e-15) -> TransformResult:
    """Assemble ``H(a, x) = H(inf, x) - e^{-ax} tail`` by the chosen method.

    ``method`` is one of ``poincare``, ``hadamard``, ``convergent``,
    ``quadrature`` or ``auto`` (convergent where it applies, else poincare).
    """
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}; expected one of {METHODS}")
    if method == "auto":
        method = _auto_method(query)
    cinf = closed_inf(query.kind, query.nu, query.x)
    damp = math.exp(-query.ax)
    oracle = oracle_err = None
    if with_oracle or method == "quadrature":
        oracle, oracle_err = quadrature_oracle(query, abs_tol=oracle_tol, with_error=True)
    if method == "quadrature":
        return TransformResult(query, method, cinf, None, oracle, 0.0, oracle_err, oracle, oracle_err)
    if method == "poincare":
        tail = poincare_tail(query, "optimal", n_max=n_max)
        rbound = damp * remainder_bound(query)
    elif method == "hadamard":
        tail = hadamard_tail(query, n_max=n_max)
        rbound = damp * remainder_bound(query)
    else:
        tail = convergent_sum(query)
        rbound = 0.0
    value = cinf - damp * tail.value
    rounding = 4.0 * _EPS * (abs(cinf) + damp * math.fsum(abs(t) for t in tail.terms))
    err = damp * tail.error_estimate + rounding
    return TransformResult(query, method, cinf, tail, value, rbound, err, oracle, oracle_err)
