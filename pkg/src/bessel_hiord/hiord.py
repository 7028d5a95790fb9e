"""Exact n-th derivatives of Bessel functions at a fixed argument.

All four kinds reduce to a binomial combination of shifted orders::

    J, Y:  f^(n)(a) = 2^-n    sum_r (-1)^r C(n, r) f_{nu-n+2r}(a)
    K:     f^(n)(a) = (-2)^-n sum_r        C(n, r) f_{nu-n+2r}(a)
    I:     f^(n)(a) = 2^-n    sum_r        C(n, r) f_{nu-n+2r}(a)

The orders ``nu-n+2r`` for every ``n <= n_max`` lie on the ladder
``nu + k``, ``|k| <= n_max``, which :class:`OrderLadder` evaluates once.
"""
from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .exceptions import DomainError
from .signedlog import ZERO, SignedLog, signed_log_sum
from .specfun import BesselKind, bessel_ladder, log_binomial

__all__ = [
    "Method",
    "DerivativeResult",
    "TaylorStream",
    "OrderLadder",
    "deriv_exact",
    "taylor_stream",
    "derivative_stream",
    "DEFAULT_N_MAX",
]

DEFAULT_N_MAX = 400
_LOG2 = math.log(2.0)
# relative accuracy assumed for each ladder value
_LADDER_REL_ERR = 1e-13


class Method(str, enum.Enum):
    exact_sum = "exact_sum"
    asymptotic = "asymptotic"
    envelope = "envelope"


@dataclass(frozen=True)
class DerivativeResult:
    kind: BesselKind
    nu: float
    a: float
    n: int
    value: SignedLog
    method: Method
    est_abs_err: float
    condition: float = 1.0

    def __float__(self) -> float:
        return self.value.to_real()


def _check_args(kind: BesselKind, nu: float, a: float) -> None:
    if not a > 0:
        raise DomainError(f"derivative point must be positive, got a={a}")
    if kind is BesselKind.K and not 0 <= nu < 1:
        raise DomainError(f"K derivatives need 0 <= nu < 1, got {nu}")
    if kind is BesselKind.Y and not -1 < nu < 1:
        raise DomainError(f"Y derivatives need -1 < nu < 1, got {nu}")


@dataclass
class OrderLadder:
    """Cached values ``f_{nu+k}(a)`` for ``|k| <= n_max``."""

    kind: BesselKind
    nu: float
    a: float
    n_max: int
    _values: list = field(init=False, repr=False)

    def __post_init__(self):
        self.kind = BesselKind.coerce(self.kind)
        self._values = bessel_ladder(self.kind, self.nu, self.a, -self.n_max, self.n_max)

    def __getitem__(self, k: int) -> SignedLog:
        if abs(k) > self.n_max:
            raise IndexError(f"ladder offset {k} beyond n_max={self.n_max}")
        return self._values[k + self.n_max]

    @cached_property
    def _arrays(self) -> tuple[np.ndarray, np.ndarray]:
        signs = np.array([v.sign for v in self._values], dtype=float)
        logs = np.array([v.log_abs if v.sign else -np.inf for v in self._values])
        return signs, logs

    def derivative(self, n: int) -> DerivativeResult:
        if not 0 <= n <= self.n_max:
            raise DomainError(f"derivative order {n} outside [0, {self.n_max}]")
        kind = self.kind
        signs, logs = self._arrays
        r = np.arange(n + 1)
        idx = self.n_max - n + 2 * r
        term_sign = signs[idx].copy()
        if kind in (BesselKind.J, BesselKind.Y):
            term_sign[1::2] *= -1.0
        term_log = logs[idx] + _log_binomial_row(n) - n * _LOG2
        live = term_sign != 0
        if not live.any():
            return DerivativeResult(kind, self.nu, self.a, n, ZERO, Method.exact_sum, 0.0, 1.0)
        top = term_log[live].max()
        scaled = term_sign[live] * np.exp(term_log[live] - top)
        total = math.fsum(scaled)
        magnitude = float(np.abs(scaled).sum())
        if kind is BesselKind.K and n % 2:
            total = -total
        if total == 0.0:
            est = SignedLog(1, top + math.log(magnitude * _LADDER_REL_ERR)).to_real()
            return DerivativeResult(kind, self.nu, self.a, n, ZERO, Method.exact_sum, est, math.inf)
        cond = magnitude / abs(total)
        value = SignedLog(1 if total > 0 else -1, top + math.log(abs(total)))
        # ladder error on every term plus rounding in the sum
        rel = (_LADDER_REL_ERR + (n + 1) * sys.float_info.epsilon) * cond
        est = abs(value).scale(math.log(rel)).to_real()
        return DerivativeResult(kind, self.nu, self.a, n, value, Method.exact_sum, est, cond)


@lru_cache(maxsize=2048)
def _log_binomial_row(n: int) -> np.ndarray:
    """``log C(n, r)`` for ``r = 0..n``, exact-rounded from integer binomials."""
    row = np.array([log_binomial(n, r) for r in range(n // 2 + 1)])
    full = np.concatenate([row, row[: (n + 1) // 2][::-1]])
    full.setflags(write=False)
    return full


def deriv_exact(kind, nu: float, a: float, n: int) -> DerivativeResult:
    """``n``-th derivative of ``kind_nu`` at ``a`` by the finite binomial sum."""
    kind = BesselKind.coerce(kind)
    _check_args(kind, nu, a)
    if n < 0:
        raise DomainError(f"derivative order must be >= 0, got {n}")
    return OrderLadder(kind, nu, a, n).derivative(n)


@dataclass(frozen=True)
class TaylorStream:
    """Taylor coefficients ``f^(n)(a) / n!`` of ``kind_nu`` about ``a``."""

    kind: BesselKind
    nu: float
    a: float
    coeffs: tuple

    @property
    def n_max(self) -> int:
        return len(self.coeffs) - 1

    @cached_property
    def radius(self) -> float:
        """Radius of convergence: infinite for entire cases, ``a`` otherwise."""
        integer = float(self.nu).is_integer()
        if integer and self.kind in (BesselKind.J, BesselKind.I):
            return math.inf
        return self.a

    def derivative(self, n: int) -> SignedLog:
        return self.coeffs[n].scale(math.lgamma(n + 1.0))

    def evaluate(self, u: float, n_terms: int | None = None) -> float:
        """Partial Taylor sum at ``a + u``."""
        N = self.n_max if n_terms is None else min(n_terms, self.n_max)
        if u == 0:
            return self.coeffs[0].to_real()
        lu = math.log(abs(u))
        su = 1 if u > 0 else -1
        terms = []
        for n in range(N + 1):
            c = self.coeffs[n]
            if c.sign:
                terms.append(SignedLog(c.sign * (su if n % 2 else 1), c.log_abs + n * lu))
        return signed_log_sum(terms)[0].to_real()


def taylor_stream(kind, nu: float, a: float, n_max: int = DEFAULT_N_MAX) -> TaylorStream:
    kind = BesselKind.coerce(kind)
    _check_args(kind, nu, a)
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    ladder = OrderLadder(kind, nu, a, n_max)
    coeffs = tuple(ladder.derivative(n).value.scale(-math.lgamma(n + 1.0)) for n in range(n_max + 1))
    return TaylorStream(kind, nu, a, coeffs)


def derivative_stream(kind, nu: float, a: float, n_max: int = DEFAULT_N_MAX) -> list[DerivativeResult]:
    """All exact derivatives ``n = 0..n_max`` sharing one order ladder."""
    kind = BesselKind.coerce(kind)
    _check_args(kind, nu, a)
    ladder = OrderLadder(kind, nu, a, n_max)
    return [ladder.derivative(n) for n in range(n_max + 1)]
