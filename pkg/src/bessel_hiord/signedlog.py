"""Sign plus log-magnitude representation of real numbers.

Quantities such as ``n! a**-n`` overflow double precision long before
``n = 400``; every such quantity in this package is carried as a
:class:`SignedLog` and only exponentiated at the end.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

__all__ = ["SignedLog", "signed_log_sum"]

# Cody-Waite split of ln 2: k * _LN2_HI is exact for |k| < 2**20
_LN2_HI = 6.93147180369123816490e-01
_LN2_LO = 1.90821492927058770002e-10


def _two_sum(hi: float, lo: float) -> tuple[float, float]:
    s = hi + lo
    if not math.isfinite(s):
        return s, 0.0
    bb = s - hi
    return s, (hi - (s - bb)) + (lo - bb)


@dataclass(frozen=True)
class SignedLog:
    """A real number ``sign * exp(log_abs)``.

    ``sign`` is one of -1, 0, +1; ``log_abs`` is ignored when ``sign == 0``.
    ``log_lo`` is an optional low-order correction (``log|x| = log_abs +
    log_lo``, ``|log_lo| <= ulp(log_abs)``) that keeps the round trip through
    :meth:`from_real` exact to a few ulps even when ``|log_abs|`` is in the
    hundreds.  Code that only reads ``log_abs`` sees the correctly rounded log.
    """

    sign: int
    log_abs: float = -math.inf
    log_lo: float = field(default=0.0, repr=False, compare=False)

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign!r}")
        if self.sign != 0 and math.isnan(self.log_abs):
            raise ValueError("log_abs is NaN")

    @classmethod
    def from_real(cls, value: float) -> "SignedLog":
        if value == 0:
            return ZERO
        if math.isnan(value):
            raise ValueError("cannot represent NaN")
        return cls.from_scaled(value, 0)

    @classmethod
    def from_scaled(cls, value: float, exp2: int) -> "SignedLog":
        """``value * 2**exp2`` without forming the (possibly overflowing) product."""
        if value == 0:
            return ZERO
        if math.isnan(value):
            raise ValueError("cannot represent NaN")
        if math.isinf(value):
            return cls(1 if value > 0 else -1, math.inf)
        m, e = math.frexp(abs(value))
        e += exp2
        # log|v| = e ln2 + log m, with e * _LN2_HI exact
        hi, lo = _two_sum(e * _LN2_HI, math.log(m))
        return cls(1 if value > 0 else -1, *_two_sum(hi, lo + e * _LN2_LO))

    @classmethod
    def from_log(cls, log_abs: float, sign: int = 1) -> "SignedLog":
        if sign == 0 or log_abs == -math.inf:
            return ZERO
        return cls(sign, log_abs)

    def to_real(self) -> float:
        """Exponentiate; returns +-inf on overflow and 0.0 on underflow."""
        if self.sign == 0:
            return 0.0
        if self.log_abs > 709.79:
            return math.copysign(math.inf, self.sign)
        if self.log_lo == 0.0 or not math.isfinite(self.log_abs):
            return self.sign * math.exp(self.log_abs)
        k = round(self.log_abs / _LN2_HI)
        r = (self.log_abs - k * _LN2_HI) - k * _LN2_LO + self.log_lo
        return self.sign * math.ldexp(math.exp(r), k)

    __float__ = to_real

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def __neg__(self) -> "SignedLog":
        return SignedLog(-self.sign, self.log_abs, self.log_lo) if self.sign else ZERO

    def __abs__(self) -> "SignedLog":
        return SignedLog(1, self.log_abs, self.log_lo) if self.sign else ZERO

    def __mul__(self, other) -> "SignedLog":
        other = _coerce(other)
        if self.sign == 0 or other.sign == 0:
            return ZERO
        hi, lo = _two_sum(self.log_abs, other.log_abs)
        return SignedLog(self.sign * other.sign, *_two_sum(hi, lo + self.log_lo + other.log_lo))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "SignedLog":
        other = _coerce(other)
        if other.sign == 0:
            raise ZeroDivisionError("SignedLog division by zero")
        if self.sign == 0:
            return ZERO
        hi, lo = _two_sum(self.log_abs, -other.log_abs)
        return SignedLog(self.sign * other.sign, *_two_sum(hi, lo + self.log_lo - other.log_lo))

    def __rtruediv__(self, other) -> "SignedLog":
        return _coerce(other) / self

    def __add__(self, other) -> "SignedLog":
        other = _coerce(other)
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        hi, lo = (self, other) if self.log_abs >= other.log_abs else (other, self)
        ratio = math.exp((lo.log_abs - hi.log_abs) + (lo.log_lo - hi.log_lo))
        if hi.sign == lo.sign:
            step = math.log1p(ratio)
        elif ratio == 1.0:
            return ZERO
        else:
            step = math.log1p(-ratio)
        return SignedLog(hi.sign, *_two_sum(hi.log_abs, step + hi.log_lo))

    __radd__ = __add__

    def __sub__(self, other) -> "SignedLog":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "SignedLog":
        return _coerce(other) - self

    def __pow__(self, p: float) -> "SignedLog":
        if self.sign == 0:
            return ZERO if p > 0 else SignedLog(1, 0.0)
        if self.sign < 0 and p != int(p):
            raise ValueError("non-integer power of a negative SignedLog")
        sign = -1 if (self.sign < 0 and int(p) % 2) else 1
        return SignedLog(sign, p * (self.log_abs + self.log_lo))

    def scale(self, log_factor: float) -> "SignedLog":
        """Multiply by ``exp(log_factor)``."""
        if self.sign == 0:
            return ZERO
        hi, lo = _two_sum(self.log_abs, log_factor)
        return SignedLog(self.sign, *_two_sum(hi, lo + self.log_lo))

    def __repr__(self) -> str:
        if self.sign == 0:
            return "SignedLog(0)"
        return f"SignedLog({'+' if self.sign > 0 else '-'}exp({self.log_abs!r}))"


ZERO = SignedLog(0)


def _coerce(value) -> SignedLog:
    if isinstance(value, SignedLog):
        return value
    return SignedLog.from_real(float(value))


def signed_log_sum(values: Iterable[SignedLog]) -> tuple[SignedLog, float]:
    """Sum in two passes: locate the largest magnitude, then add scaled residuals.

    Returns the sum and its condition number ``sum|v| / |sum v|`` (``inf`` when
    the sum cancels to zero, 1.0 for an empty or all-zero input).
    """
    vals = [v for v in values if v.sign != 0]
    if not vals:
        return ZERO, 1.0
    top = max(v.log_abs for v in vals)
    scaled = [v.sign * math.exp(v.log_abs - top) for v in vals]
    total = math.fsum(scaled)
    magnitude = math.fsum(abs(s) for s in scaled)
    if total == 0.0:
        return ZERO, math.inf
    result = SignedLog(1 if total > 0 else -1, top + math.log(abs(total)))
    return result, magnitude / abs(total)
