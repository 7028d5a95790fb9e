import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from bessel_hiord import (DomainError, Method, bessel, bessel_value, deriv_exact, derivative_stream,
                          taylor_stream)
from bessel_hiord.hiord import OrderLadder

from conftest import mp_bessel


def mp_deriv(kind, nu, a, n):
    return mpmath.diff(lambda t: mp_bessel(kind, nu, t), a, n)


def test_zeroth_derivative_is_the_function():
    for kind, nu in [("J", 0.0), ("Y", 0.4), ("I", 2.0), ("K", 0.5)]:
        d = deriv_exact(kind, nu, 1.7, 0)
        assert d.value == bessel(kind, nu, 1.7)
        assert d.method is Method.exact_sum


def test_first_derivative_of_j0():
    d = deriv_exact("J", 0, 1.0, 1)
    assert float(d) == pytest.approx(-0.4400505857449335, rel=1e-14)


@pytest.mark.parametrize("kind, nu", [("J", 0), ("J", 0.3), ("J", 3), ("Y", 0), ("Y", -0.6), ("Y", 0.4),
                                      ("I", 0), ("I", 1.5), ("K", 0), ("K", 0.5), ("K", 0.25)])
@pytest.mark.parametrize("a", [0.5, 1.0, 3.0])
def test_low_order_derivatives_against_mpmath(kind, nu, a):
    stream = derivative_stream(kind, nu, a, 8)
    for n, d in enumerate(stream):
        ref = float(mp_deriv(kind, nu, a, n))
        assert abs(float(d) - ref) <= max(d.est_abs_err, 1e-13 * abs(ref)) * 4
        assert d.est_abs_err >= 0


def test_k_half_thirtieth_derivative():
    # K_{1/2}(x) = sqrt(pi/(2x)) e^-x, differentiated exactly
    with mpmath.workdps(50):
        ref = mpmath.diff(lambda t: mpmath.sqrt(mpmath.pi / (2 * t)) * mpmath.exp(-t), 1, 30)
    d = deriv_exact("K", 0.5, 1.0, 30)
    assert d.value.sign == 1
    assert float(d) == pytest.approx(float(ref), rel=1e-10)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["J", "I"]), st.floats(0, 3), st.floats(0.5, 4), st.integers(0, 40))
def test_error_estimate_covers_actual_error(kind, nu, a, n):
    d = deriv_exact(kind, nu, a, n)
    with mpmath.workdps(60):
        ref = mp_deriv(kind, nu, a, n)
    assert abs(float(d) - float(ref)) <= d.est_abs_err + 1e-300


def test_large_n_does_not_overflow():
    d = deriv_exact("K", 0.5, 0.5, 400)
    assert math.isfinite(d.value.log_abs)
    assert d.value.log_abs > 700  # far beyond double range
    expected = math.lgamma(401) + 400 * math.log(2)  # leading n! a^-n growth
    assert abs(d.value.log_abs - expected) < 10


def test_domain_errors():
    with pytest.raises(DomainError):
        deriv_exact("K", 1.5, 1.0, 3)
    with pytest.raises(DomainError):
        deriv_exact("Y", 1.0, 1.0, 3)
    with pytest.raises(DomainError):
        deriv_exact("J", 0, 0.0, 3)
    with pytest.raises(DomainError):
        deriv_exact("J", 0, 1.0, -1)
    with pytest.raises(IndexError):
        OrderLadder("J", 0.0, 1.0, 3)[4]


def test_taylor_stream_coefficients_and_radius():
    s = taylor_stream("J", 0, 1.0, 0)
    assert len(s.coeffs) == 1 and s.coeffs[0] == bessel("J", 0, 1.0)
    assert taylor_stream("J", 2, 1.0, 5).radius == math.inf
    assert taylor_stream("I", 0, 1.0, 5).radius == math.inf
    assert taylor_stream("J", 0.5, 1.5, 5).radius == 1.5
    assert taylor_stream("K", 0.0, 2.0, 5).radius == 2.0
    s = taylor_stream("K", 0.5, 1.0, 10)
    assert s.derivative(7).to_real() == pytest.approx(float(deriv_exact("K", 0.5, 1.0, 7)), rel=1e-13)


@pytest.mark.parametrize("kind, nu, a", [("J", 0.3, 1.0), ("Y", 0.4, 2.0), ("K", 0.5, 1.0), ("K", 0.0, 1.5),
                                         ("I", 0.7, 1.0)])
def test_taylor_reconstruction_inside_radius(kind, nu, a):
    s = taylor_stream(kind, nu, a, 200)
    for frac in (-0.8, -0.4, 0.4, 0.8):
        u = frac * a
        target = bessel_value(kind, nu, a + u)
        errs = [abs(s.evaluate(u, N) - target) for N in (25, 50, 200)]
        assert errs[2] <= errs[0] + 1e-15
        assert errs[2] < 1e-9 * max(1.0, abs(target))


def test_taylor_reconstruction_entire_case():
    s = taylor_stream("J", 0, 1.0, 120)
    assert s.evaluate(3.0) == pytest.approx(bessel_value("J", 0, 4.0), abs=1e-12)
    assert s.evaluate(-0.9) == pytest.approx(bessel_value("J", 0, 0.1), abs=1e-12)


@pytest.mark.parametrize("kind, nu, p", [("J", 0.5, 1.5), ("J", 0.3, 1.3), ("K", 0.5, 0.5), ("K", 0.2, 0.8)])
def test_normalized_sequence_bounded(kind, nu, p):
    a = 1.0
    stream = derivative_stream(kind, nu, a, 300)
    vals = [d.value.log_abs + n * math.log(a) + p * math.log(n) - math.lgamma(n + 1) for n, d in
            enumerate(stream) if n >= 50]
    assert max(vals) - min(vals) < math.log(10.0)
