"""Foundation evaluators: signed log-gamma, regularized incomplete gamma and
real-order Bessel functions at a fixed positive argument.

Bessel strategy, tuned for a moderate argument (``x <= 20``) and orders up
to a few hundred:

* ``J`` and ``I``: ascending power series.  The partial sums are formed in
  double precision; if the float pass shows cancellation (largest term far
  above the sum) the series is re-summed in :mod:`decimal` with enough extra
  digits to absorb it.
* ``K``: base pair ``K_f, K_{f+1}`` (``0 <= f < 1``) from the trapezoidal
  rule on ``int_0^inf exp(-x cosh t) cosh(nu t) dt``, whose terms are all
  positive, so it keeps full precision at any ``x`` and near integer order
  (the reflection formula through ``I_{+-nu}`` is kept as a cross-check);
  higher orders by upward recurrence, which is forward-stable for ``K``.
* ``Y``: reflection through ``J_{+-nu}``; integer orders from the logarithmic
  series for ``Y_0, Y_1`` and upward recurrence.
"""
from __future__ import annotations

import decimal
import enum
import math
import warnings
from dataclasses import dataclass

from .exceptions import AccuracyWarning, ConvergenceError, DomainError, PoleError
from .signedlog import ZERO, SignedLog

__all__ = [
    "BesselKind",
    "GammaPair",
    "ln_gamma_signed",
    "log_binomial",
    "incomplete_gamma",
    "log_gamma_p",
    "upper_gamma",
    "bessel",
    "bessel_value",
    "bessel_at_zero",
    "bessel_ladder",
    "bessel_k_reflection",
    "bessel_k_recurrence",
    "NEAR_INTEGER",
]

EULER_GAMMA = 0.57721566490153286061
LOG_PI = math.log(math.pi)

# Reflection formulas switch to the integer-order branch inside this band.
_LN2 = math.log(2.0)
NEAR_INTEGER = 1e-6
_TINY_FRACTION = 1e-200
_SIN_WARN = 1e-8
_MAX_TERMS = 20000


class BesselKind(str, enum.Enum):
    J = "J"
    Y = "Y"
    I = "I"  # noqa: E741
    K = "K"

    @classmethod
    def coerce(cls, kind) -> "BesselKind":
        if isinstance(kind, cls):
            return kind
        try:
            return cls(str(kind).upper())
        except ValueError:
            raise DomainError(f"unknown Bessel kind {kind!r}; expected J, Y, I or K") from None

    @property
    def transform_order_domain(self) -> str:
        """Human-readable order constraint for the Laplace-transform context."""
        return _ORDER_DOMAIN[self]

    def check_transform_order(self, nu: float) -> None:
        ok = {
            BesselKind.J: nu >= 0,
            BesselKind.K: 0 <= nu < 1,
            BesselKind.Y: -1 < nu < 1,
            BesselKind.I: nu >= 0,
        }[self]
        if not ok:
            raise DomainError(f"{self.value}: order {nu} outside {self.transform_order_domain}")


_ORDER_DOMAIN = {
    BesselKind.J: "nu >= 0",
    BesselKind.K: "0 <= nu < 1",
    BesselKind.Y: "-1 < nu < 1",
    BesselKind.I: "nu >= 0",
}


def _sinpi(x: float) -> float:
    """``sin(pi x)`` with exact argument reduction, accurate near the zeros."""
    r = math.fmod(x, 2.0)
    if r >= 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    # r in [-1, 1); fold onto [-1/2, 1/2] using sin(pi r) = sin(pi (+-1 - r))
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    if r == 0.0:
        return 0.0
    return math.sin(math.pi * r)


def _cospi(x: float) -> float:
    r = math.fmod(abs(x), 2.0)
    if r > 1.0:
        r = 2.0 - r
    if r < 0.25:
        return math.cos(math.pi * r)
    # cos(pi r) = sin(pi (1/2 - r)); the subtraction is exact here
    return _sinpi(0.5 - r)


def _nearest_int(nu: float) -> int | None:
    m = round(nu)
    return int(m) if abs(nu - m) < NEAR_INTEGER else None


# ---------------------------------------------------------------------------
# gamma-type helpers
# ---------------------------------------------------------------------------

def ln_gamma_signed(x: float) -> SignedLog:
    """``Gamma(x)`` as a :class:`SignedLog`, using reflection for ``x < 0``."""
    if x <= 0 and x == math.floor(x):
        raise PoleError(f"Gamma has a pole at {x}")
    if x > 0:
        return SignedLog(1, math.lgamma(x))
    s = _sinpi(x)
    return SignedLog(1 if s > 0 else -1, LOG_PI - math.log(abs(s)) - math.lgamma(1.0 - x))


def _ln_gamma_shifted(base: float, n: int) -> SignedLog:
    """``Gamma(base + n)`` with the integer shift ``n`` kept exact.

    Near a pole ``base + n`` is not representable accurately as a float, but
    ``sin(pi (base + n)) = (-1)^n sin(pi base)`` is.
    """
    z = base + n
    if z > 0.5:
        return SignedLog(1, math.lgamma(z))
    s = _sinpi(base)
    if n % 2:
        s = -s
    if s == 0.0:
        raise PoleError(f"Gamma has a pole at {base} + {n}")
    return SignedLog(1 if s > 0 else -1, LOG_PI - math.log(abs(s)) - math.lgamma((1 - n) - base))


def log_binomial(n: int, r: int) -> float:
    """Natural log of the binomial coefficient ``C(n, r)``."""
    if not 0 <= r <= n:
        raise IndexError(f"binomial index r={r} outside [0, {n}]")
    if n <= 5000:
        return math.log(math.comb(n, r))
    return (ln_gamma_signed(n + 1.0).log_abs - ln_gamma_signed(r + 1.0).log_abs
            - ln_gamma_signed(n - r + 1.0).log_abs)


@dataclass(frozen=True)
class GammaPair:
    """Regularized lower (``P``) and upper (``Q``) incomplete gamma values."""

    P: float
    Q: float


def _stirling_correction(alpha: float) -> float:
    """``lgamma(alpha) - [(alpha - 1/2) log(alpha) - alpha + log(2 pi)/2]`` for ``alpha >= 10``."""
    r = 1.0 / (alpha * alpha)
    c = (1.0 / 12, 1.0 / 360, 1.0 / 1260, 1.0 / 1680, 1.0 / 1188, 691.0 / 360360, 1.0 / 156, 3617.0 / 122400)
    acc = 0.0
    for k in range(len(c) - 1, -1, -1):
        acc = c[k] - r * acc
    return acc / alpha


def _log1pmx_neg(d: float) -> float:
    """``d - log1p(d)`` without cancellation for small ``d``."""
    if abs(d) > 0.25:
        return d - math.log1p(d)
    # d**2/2 - d**3/3 + ...; 60 terms reach 1e-38 at |d| = 1/4
    total, p = 0.0, d
    for k in range(2, 62):
        p *= -d
        term = p / k
        total -= term
        if abs(term) <= 1e-17 * abs(total):
            break
    return total


def _gamma_log_prefactor(alpha: float, x: float) -> float:
    """``log(x**alpha e**-x / Gamma(alpha))``.

    For large ``alpha`` the three terms of the naive form cancel to a small
    result; rewriting through ``x / alpha`` keeps the absolute error at a few ulps.
    """
    d = (x - alpha) / alpha
    if alpha < 10.0 or d < -0.5:
        # no damaging cancellation: either small terms or a strongly negative result
        return alpha * math.log(x) - x - math.lgamma(alpha)
    return -alpha * _log1pmx_neg(d) + 0.5 * math.log(alpha / (2.0 * math.pi)) - _stirling_correction(alpha)


def _gamma_series(alpha: float, x: float, tol: float = 1e-17) -> float:
    """Return ``sum x**k / (alpha+1)_k``; ``P = prefactor * sum / alpha``."""
    term = 1.0
    total = 1.0
    ap = alpha
    for _ in range(_MAX_TERMS):
        ap += 1.0
        term *= x / ap
        total += term
        if term < total * tol:
            return total
    raise ConvergenceError(f"incomplete gamma series did not converge (alpha={alpha}, x={x})")


def _gamma_cfrac(alpha: float, x: float, tol: float = 1e-16) -> float:
    """Modified Lentz evaluation of the continued fraction for ``Q``."""
    tiny = 1e-300
    b = x + 1.0 - alpha
    c = 1.0 / tiny
    d = 1.0 / b if b != 0 else 1.0 / tiny
    h = d
    for i in range(1, _MAX_TERMS):
        an = -i * (i - alpha)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < tol:
            return h
    raise ConvergenceError(f"incomplete gamma continued fraction did not converge (alpha={alpha}, x={x})")


def incomplete_gamma(alpha: float, x: float, method: str = "auto") -> GammaPair:
    """Regularized incomplete gamma functions ``P(alpha, x)`` and ``Q = 1 - P``.

    ``method`` is ``"auto"`` (series below ``x = alpha + 1``, continued
    fraction above), ``"series"`` or ``"cfrac"``.
    """
    if alpha <= 0:
        raise DomainError(f"incomplete gamma needs alpha > 0, got {alpha}")
    if x < 0:
        raise DomainError(f"incomplete gamma needs x >= 0, got {x}")
    if x == 0:
        return GammaPair(0.0, 1.0)
    if method == "auto":
        method = "series" if x < alpha + 1.0 else "cfrac"
    if method == "series":
        p = math.exp(_gamma_log_prefactor(alpha, x)) * _gamma_series(alpha, x) / alpha
        p = min(p, 1.0)
        return GammaPair(p, 1.0 - p)
    if method == "cfrac":
        q = math.exp(_gamma_log_prefactor(alpha, x)) * _gamma_cfrac(alpha, x)
        q = min(q, 1.0)
        return GammaPair(1.0 - q, q)
    raise ValueError(f"unknown method {method!r}")


def log_gamma_p(alpha: float, x: float) -> float:
    """``log P(alpha, x)``, finite even where ``P`` underflows."""
    if alpha <= 0 or x < 0:
        raise DomainError(f"log_gamma_p needs alpha > 0 and x >= 0, got ({alpha}, {x})")
    if x == 0:
        return -math.inf
    if x < alpha + 1.0:
        return _gamma_log_prefactor(alpha, x) + math.log(_gamma_series(alpha, x) / alpha)
    q = math.exp(_gamma_log_prefactor(alpha, x)) * _gamma_cfrac(alpha, x)
    return math.log1p(-min(q, 1.0))


def upper_gamma(alpha: float, x: float) -> float:
    """Non-regularized upper incomplete gamma ``Gamma(alpha, x)``."""
    return incomplete_gamma(alpha, x).Q * math.gamma(alpha)


# ---------------------------------------------------------------------------
# power series for J and I
# ---------------------------------------------------------------------------

def _series_start(nu: float, q: float) -> int:
    # first k after which |q / (k (k + nu))| < 1 for every later k
    k = max(1, math.ceil(-nu) + 1)
    while k * (k + nu) <= q:
        k += 1
    return k


def _float_series(nu: float, q: float, sgn: float, shift: int = 0) -> tuple[float, float]:
    """``sum (sgn q)^k / (k! (mu+1)_k)``, ``mu = nu + shift``, in double precision; also max |term|."""
    term = 1.0
    total = 1.0
    biggest = 1.0
    k_stable = _series_start(nu + shift, q)
    for k in range(1, _MAX_TERMS):
        term *= sgn * q / (k * (nu + (shift + k)))
        total += term
        a = abs(term)
        if a > biggest:
            biggest = a
        if k >= k_stable and a <= 1e-17 * abs(total):
            return total, biggest
        if term == 0.0 and k >= k_stable:
            return total, biggest
    raise ConvergenceError(f"Bessel series did not converge (nu={nu}, q={q})")


def _decimal_series(nu: float, x: float, sgn: int, digits: int, shift: int = 0) -> float:
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        D = decimal.Decimal
        q = D(x) * D(x) / 4
        dnu = D(nu) + shift
        term = D(1)
        total = D(1)
        k_stable = _series_start(nu + shift, x * x / 4)
        eps = D(10) ** (-(digits - 2))
        for k in range(1, _MAX_TERMS):
            term = term * q / (k * (dnu + k))
            if sgn < 0:
                term = -term
            total += term
            if k >= k_stable and abs(term) <= eps * abs(total):
                return float(total)
    raise ConvergenceError(f"Bessel series did not converge (nu={nu}, x={x})")


def _ascending_series(nu: float, x: float, modified: bool, shift: int = 0) -> SignedLog:
    """``J_mu(x)`` (or ``I_mu(x)``), ``mu = nu + shift``, by the ascending series.

    ``mu`` must not be a negative integer.  Splitting the order into a float
    part and an exact integer shift keeps ``1 / Gamma(mu + 1)`` and the
    factors ``(mu + k)`` accurate when ``mu`` sits just off a negative integer.
    """
    q = 0.25 * x * x
    sgn = 1.0 if modified else -1.0
    total, biggest = _float_series(nu, q, sgn, shift)
    if total == 0.0 or biggest > 1024.0 * abs(total):
        lost = math.log10(biggest / abs(total)) if total != 0.0 else 17.0
        total = _decimal_series(nu, x, int(sgn), 34 + int(lost) + 4, shift)
        if total == 0.0:
            return ZERO
    g = _ln_gamma_shifted(nu, shift + 1)
    log_pref = (nu + shift) * (math.log(x) - _LN2) - g.log_abs
    sign = g.sign * (1 if total > 0 else -1)
    return SignedLog(sign, log_pref + math.log(abs(total)))


def _snap_tiny_fraction(nu: float) -> float:
    # below this the series for J_{nu-m} overflows, while nu itself is far below double resolution
    m = round(nu)
    return float(m) if abs(nu - m) < _TINY_FRACTION else nu


def _bessel_j(nu: float, x: float, shift: int = 0) -> SignedLog:
    """``J_{nu+shift}(x)``."""
    nu = _snap_tiny_fraction(nu)
    if nu == math.floor(nu) and nu + shift < 0:
        m = -int(nu) - shift
        v = _ascending_series(float(m), x, modified=False)
        return -v if m % 2 else v
    return _ascending_series(nu, x, modified=False, shift=shift)


def _bessel_i(nu: float, x: float, shift: int = 0) -> SignedLog:
    """``I_{nu+shift}(x)``."""
    nu = _snap_tiny_fraction(nu)
    if nu == math.floor(nu) and nu + shift < 0:
        return _ascending_series(float(-int(nu) - shift), x, modified=True)
    return _ascending_series(nu, x, modified=True, shift=shift)


# ---------------------------------------------------------------------------
# logarithmic series for integer-order Y and K
# ---------------------------------------------------------------------------

def _harmonic_weighted_series(m: int, x: float, sgn: int) -> float:
    """``sum (H_k + H_{m+k}) (sgn x^2/4)^k / (k! (m+k)!)``."""
    q = 0.25 * x * x
    term = 1.0 / math.factorial(m)
    hk, hmk = 0.0, sum(1.0 / j for j in range(1, m + 1))
    total = term * (hk + hmk)
    biggest = abs(total)
    k_stable = _series_start(float(m), q) + 2
    for k in range(1, _MAX_TERMS):
        term *= sgn * q / (k * (m + k))
        hk += 1.0 / k
        hmk += 1.0 / (m + k)
        t = term * (hk + hmk)
        total += t
        biggest = max(biggest, abs(t))
        if k >= k_stable and abs(t) <= 1e-17 * abs(total):
            break
    else:
        raise ConvergenceError(f"log series did not converge (m={m}, x={x})")
    if total != 0.0 and biggest <= 1024.0 * abs(total):
        return total
    lost = math.log10(biggest / abs(total)) if total != 0.0 else 17.0
    with decimal.localcontext() as ctx:
        ctx.prec = 34 + int(lost) + 4
        D = decimal.Decimal
        dq = D(x) * D(x) / 4
        term = D(1) / math.factorial(m)
        hk, hmk = D(0), sum((D(1) / j for j in range(1, m + 1)), D(0))
        acc = term * (hk + hmk)
        eps = D(10) ** (-(ctx.prec - 2))
        for k in range(1, _MAX_TERMS):
            term = term * dq / (k * (m + k))
            if sgn < 0:
                term = -term
            hk += D(1) / k
            hmk += D(1) / (m + k)
            t = term * (hk + hmk)
            acc += t
            if k >= k_stable and abs(t) <= eps * abs(acc):
                return float(acc)
    raise ConvergenceError(f"log series did not converge (m={m}, x={x})")


def _y_integer_series(m: int, x: float) -> float:
    """``Y_m(x)`` for ``m`` in {0, 1} from the logarithmic series."""
    half = 0.5 * x
    finite = sum(math.factorial(m - k - 1) / math.factorial(k) * half ** (2 * k - m) for k in range(m))
    jm = _bessel_j(float(m), x).to_real()
    t = _harmonic_weighted_series(m, x, -1)
    return (-finite + 2.0 * ((math.log(x) - _LN2) + EULER_GAMMA) * jm - half ** m * t) / math.pi


# ---------------------------------------------------------------------------
# K: reflection, integral representation, recurrence
# ---------------------------------------------------------------------------

def bessel_k_reflection(nu: float, x: float, shift: int = 0) -> SignedLog:
    """``K_mu(x) = (pi/2) (I_{-mu} - I_mu) / sin(pi mu)``, ``mu = nu + shift`` non-integer."""
    s = _sinpi(nu)
    if shift % 2:
        s = -s
    if s == 0.0:
        raise DomainError("reflection formula undefined at integer order")
    if abs(s) < _SIN_WARN:
        warnings.warn(f"K reflection at nu={nu + shift}: |sin(pi nu)| = {abs(s):.2e}", AccuracyWarning,
                      stacklevel=2)
    diff = _bessel_i(-nu, x, -shift) - _bessel_i(nu, x, shift)
    return diff * (0.5 * math.pi / s)


def _k_integral(nu: float, x: float) -> SignedLog:
    """``K_nu(x)`` by the trapezoidal rule on the cosh integral representation.

    Terms are summed relative to the peak of ``-x (cosh t - 1) + nu t`` at
    ``t = asinh(nu / x)``, so tiny ``x`` cannot overflow.
    """
    h = min(0.05, 0.25 / math.sqrt(x))
    nu = abs(nu)
    log_x = math.log(x)
    if nu > x:
        t_peak = math.log(nu) - log_x + math.log1p(math.sqrt(1.0 + (x / nu) ** 2))
    else:
        t_peak = math.asinh(nu / x)
    # x (cosh t_peak - 1) = hypot(x, nu) - x
    g_peak = x - math.hypot(x, nu) + nu * t_peak
    total = 0.5 * math.exp(-g_peak)
    j = 1
    while True:
        t = j * h
        # exp(-x (cosh t - 1)) cosh(nu t), written to avoid overflow of cosh
        if t < 40.0:
            arg = -x * 2.0 * math.sinh(0.5 * t) ** 2 - g_peak
        else:
            arg = x - math.exp(log_x + t - _LN2) - g_peak
        term = 0.5 * (math.exp(arg + nu * t) + math.exp(arg - nu * t))
        total += term
        if term < 1e-18 * total and t > t_peak:
            break
        j += 1
        if j > 10 * _MAX_TERMS:
            raise ConvergenceError(f"K integral did not converge (nu={nu}, x={x})")
    return SignedLog.from_real(total * h).scale(g_peak - x)


def _k_base(f: float, x: float) -> tuple[SignedLog, SignedLog]:
    """``K_f`` and ``K_{f+1}`` for ``0 <= f < 1``."""
    return _k_integral(f, x), _k_integral(f + 1.0, x)


def _upward_k(k0: SignedLog, k1: SignedLog, f: float, x: float, count: int) -> list[SignedLog]:
    """``[K_f, ..., K_{f+count}]`` from the first two by upward recurrence.

    Runs in floats rescaled by exact powers of two; every term of
    ``K_{mu+1} = K_{mu-1} + (2 mu / x) K_mu`` is positive, so each step adds
    only rounding error.
    """
    out = [k0, k1][: count + 1]
    if count < 2:
        return out
    exp2 = int(k1.log_abs / _LN2)
    prev = k0.scale(-exp2 * _LN2).to_real()
    cur = k1.scale(-exp2 * _LN2).to_real()
    for j in range(1, count):
        prev, cur = cur, prev + (2.0 * (f + j) / x) * cur
        if cur > 1e150:
            prev, cur = math.ldexp(prev, -500), math.ldexp(cur, -500)
            exp2 += 500
        out.append(SignedLog.from_scaled(cur, exp2))
    return out


def bessel_k_recurrence(nu: float, x: float) -> SignedLog:
    """``K_nu(x)`` by upward recurrence from the base pair at ``frac(|nu|)``."""
    nu = abs(nu)
    f = nu - math.floor(nu)
    steps = int(math.floor(nu))
    k0, k1 = _k_base(f, x)
    if steps == 0:
        return k0
    return _upward_k(k0, k1, f, x, steps)[steps]


_bessel_k = bessel_k_recurrence


# ---------------------------------------------------------------------------
# Y: reflection and integer-order recurrence
# ---------------------------------------------------------------------------

def _y_reflection(nu: float, x: float, shift: int = 0) -> SignedLog:
    """``Y_mu = (J_mu cos(pi mu) - J_-mu) / sin(pi mu)``, ``mu = nu + shift``."""
    s, c = _sinpi(nu), _cospi(nu)
    if shift % 2:
        s, c = -s, -c
    if abs(s) < _SIN_WARN:
        warnings.warn(f"Y reflection at nu={nu + shift}: |sin(pi nu)| = {abs(s):.2e}", AccuracyWarning,
                      stacklevel=3)
    num = _bessel_j(nu, x, shift) * c - _bessel_j(-nu, x, -shift)
    return num / s


def _upward_y_integer(x: float, count: int) -> list[SignedLog]:
    """``[Y_0, ..., Y_count]`` via upward recurrence in floats rescaled by powers of two."""
    y0, y1 = _y_integer_series(0, x), _y_integer_series(1, x)
    out = [SignedLog.from_real(y0), SignedLog.from_real(y1)][: count + 1]
    exp2 = 0
    prev, cur = y0, y1
    for m in range(1, count):
        nxt = (2.0 * m / x) * cur - prev
        if abs(nxt) > 1e150:
            prev, cur, nxt = math.ldexp(prev, -500), math.ldexp(cur, -500), math.ldexp(nxt, -500)
            exp2 += 500
        out.append(SignedLog.from_scaled(nxt, exp2))
        prev, cur = cur, nxt
    return out


def _bessel_y(nu: float, x: float) -> SignedLog:
    m = _nearest_int(nu)
    if m is None:
        return _y_reflection(nu, x)
    v = _upward_y_integer(x, abs(m))[abs(m)]
    return -v if (m < 0 and m % 2) else v


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------

def bessel(kind, nu: float, x: float) -> SignedLog:
    """Bessel function ``kind_nu(x)`` for real order ``nu`` and ``x > 0``."""
    kind = BesselKind.coerce(kind)
    if not x > 0:
        raise DomainError(f"Bessel argument must be positive, got {x}")
    nu = float(nu)
    if kind is BesselKind.J:
        return _bessel_j(nu, x)
    if kind is BesselKind.I:
        return _bessel_i(nu, x)
    if kind is BesselKind.K:
        return _bessel_k(nu, x)
    return _bessel_y(nu, x)


def bessel_value(kind, nu: float, x: float) -> float:
    """Plain-float convenience wrapper around :func:`bessel`."""
    return bessel(kind, nu, x).to_real()


def bessel_at_zero(kind, nu: float) -> float:
    """Limit of ``kind_nu(x)`` as ``x -> 0+`` for the kinds regular at the origin."""
    kind = BesselKind.coerce(kind)
    if kind not in (BesselKind.J, BesselKind.I):
        raise DomainError(f"{kind.value}_nu is singular at the origin")
    if nu == 0:
        return 1.0
    if nu > 0 or nu == math.floor(nu):
        return 0.0
    raise DomainError(f"{kind.value}_nu(0+) diverges for nu={nu}")


def bessel_ladder(kind, nu: float, x: float, k_lo: int, k_hi: int) -> list[SignedLog]:
    """Values of ``kind_{nu+k}(x)`` for ``k = k_lo, ..., k_hi``.

    Each order is handled as ``f + j`` with ``f = nu - floor(nu)`` (exact) and
    integer ``j``, so no rung inherits the rounding of ``nu + k``.  Work is
    shared across the ladder: one recurrence per order family for ``K`` and
    integer-order ``Y``, one series per rung for ``J`` and ``I``.
    """
    kind = BesselKind.coerce(kind)
    if not x > 0:
        raise DomainError(f"Bessel argument must be positive, got {x}")
    m0 = math.floor(nu)
    f = nu - m0
    shifts = [int(m0) + k for k in range(k_lo, k_hi + 1)]
    if kind is BesselKind.J:
        return [_bessel_j(f, x, j) for j in shifts]
    if kind is BesselKind.I:
        return [_bessel_i(f, x, j) for j in shifts]
    if kind is BesselKind.Y:
        m = _nearest_int(nu)
        if m is None:
            return [_y_reflection(f, x, j) for j in shifts]
        top = max(abs(m + k_lo), abs(m + k_hi))
        ys = _upward_y_integer(x, top)
        out = []
        for k in range(k_lo, k_hi + 1):
            j = m + k
            v = ys[abs(j)]
            out.append(-v if (j < 0 and j % 2) else v)
        return out
    # K_{f+j} for j >= 0 sits in family f; for j < 0, |f + j| = (1 - f) + (-j - 1)
    g = 1.0 - f
    top = max(abs(j) for j in shifts) + 1
    families: dict[float, list[SignedLog]] = {}
    out = []
    for j in shifts:
        base, idx = (f, j) if j >= 0 else (g, -j - 1)
        if base not in families:
            families[base] = _upward_k(*_k_base(base, x), base, x, top)
        out.append(families[base][idx])
    return out
