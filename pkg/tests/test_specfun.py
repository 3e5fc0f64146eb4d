"""Special functions: sine integral, Cin, erf, Gauss-Legendre rules."""
import math

import numpy as np
import pytest
import scipy.integrate
import scipy.special
from hypothesis import given, settings
from hypothesis import strategies as st

from sincbound.errors import ArgumentError
from sincbound.specfun import cin, erf, gauss_legendre, sine_integral

# Reference values computed independently (high-order adaptive
# quadrature of the defining integrals, cross-checked against
# scipy.special.sici before being frozen here).
SI_PI = 1.8519370519824662
CIN_TWO_PI = 2.4376533930572237
ERF_ONE = 0.8427007929497149


# ---------------------------------------------------------------------------
# sine integral
# ---------------------------------------------------------------------------

def test_si_frozen_anchor():
    assert sine_integral(math.pi) == pytest.approx(SI_PI, abs=1e-14)


def test_si_at_zero_is_exactly_zero():
    assert sine_integral(0.0) == 0.0


@pytest.mark.parametrize("x", [0.25, 1.0, 3.0, 9.5, 10.5, 15.0, 40.0, 300.0])
def test_si_matches_defining_integral(x):
    ref, err = scipy.integrate.quad(
        lambda t: np.sinc(t / np.pi), 0.0, x, limit=400)
    assert err < 1e-7  # quad is conservative on oscillatory integrands
    assert sine_integral(x) == pytest.approx(ref, abs=1e-9)


@pytest.mark.parametrize("x", [0.5, 2.0, 8.0, 12.0, 77.0])
def test_si_matches_scipy(x):
    assert sine_integral(x) == pytest.approx(scipy.special.sici(x)[0], abs=1e-13)


def test_si_large_argument_approaches_half_pi():
    # Si(x) = pi/2 - cos(x)/x + O(1/x^2)
    for x in (1e4, 1e6):
        assert abs(sine_integral(x) - math.pi / 2) <= 2.0 / x


def test_si_continuous_at_series_switch():
    # The two evaluation branches meet at x = 10; after removing the
    # function's own linear change across the probe gap, any remaining
    # jump would be a branch mismatch.
    eps = 1e-9
    below = sine_integral(10.0 - eps)
    above = sine_integral(10.0 + eps)
    slope = math.sin(10.0) / 10.0
    assert abs((above - below) - 2.0 * eps * slope) < 1e-12


@given(st.floats(min_value=1e-6, max_value=500.0))
@settings(max_examples=80, deadline=None)
def test_si_is_exactly_odd(x):
    assert sine_integral(-x) == -sine_integral(x)


@given(st.floats(min_value=0.0, max_value=60.0))
@settings(max_examples=80, deadline=None)
def test_si_stays_below_first_maximum(x):
    # Si peaks at x = pi and oscillates toward pi/2 from there.
    assert 0.0 <= sine_integral(x) <= SI_PI + 1e-12


# ---------------------------------------------------------------------------
# Cin
# ---------------------------------------------------------------------------

def test_cin_frozen_anchor():
    assert cin(2.0 * math.pi) == pytest.approx(CIN_TWO_PI, abs=1e-13)


def test_cin_at_zero_is_exactly_zero():
    assert cin(0.0) == 0.0


@pytest.mark.parametrize("x", [0.3, 2.0, 8.0, 12.0, 30.0])
def test_cin_matches_defining_integral(x):
    ref, err = scipy.integrate.quad(
        lambda t: (1.0 - math.cos(t)) / t, 1e-300, x, limit=400)
    assert err < 1e-7
    assert cin(x) == pytest.approx(ref, abs=1e-9)


@pytest.mark.parametrize("x", [0.7, 5.0, 11.0, 50.0, 200.0])
def test_cin_ci_identity(x):
    # Cin(x) + Ci(x) = gamma + log(x)
    ci = scipy.special.sici(x)[1]
    assert cin(x) + ci == pytest.approx(np.euler_gamma + math.log(x), abs=1e-12)


@given(st.floats(min_value=1e-6, max_value=500.0))
@settings(max_examples=80, deadline=None)
def test_cin_is_exactly_even(x):
    assert cin(-x) == cin(x)


@given(st.floats(min_value=0.0, max_value=100.0))
@settings(max_examples=80, deadline=None)
def test_cin_nonnegative_and_monotone_envelope(x):
    # (1 - cos)/t >= 0, so Cin is nondecreasing from 0.
    assert cin(x) >= 0.0
    assert cin(x) <= cin(x + 0.5) + 1e-12


# ---------------------------------------------------------------------------
# erf
# ---------------------------------------------------------------------------

def test_erf_frozen_anchor():
    assert erf(1.0) == pytest.approx(ERF_ONE, abs=1e-16)


def test_erf_limits():
    assert erf(0.0) == 0.0
    assert erf(40.0) == 1.0


@given(st.floats(min_value=1e-8, max_value=25.0))
@settings(max_examples=80, deadline=None)
def test_erf_odd_and_bounded(x):
    assert erf(-x) == -erf(x)
    assert 0.0 < erf(x) <= 1.0


# ---------------------------------------------------------------------------
# Gauss-Legendre rules
# ---------------------------------------------------------------------------

def test_gl_order_two_closed_form():
    rule = gauss_legendre(2)
    assert rule.order == 2
    np.testing.assert_allclose(rule.nodes, [-1 / math.sqrt(3), 1 / math.sqrt(3)],
                               rtol=0, atol=1e-15)
    np.testing.assert_allclose(rule.weights, [1.0, 1.0], rtol=0, atol=1e-15)


@pytest.mark.parametrize("order", [1, 2, 5, 16, 64, 301])
def test_gl_structure(order):
    rule = gauss_legendre(order)
    assert len(rule.nodes) == len(rule.weights) == order
    # ascending, strictly inside (-1, 1)
    assert np.all(np.diff(rule.nodes) > 0)
    assert rule.nodes[0] > -1.0 and rule.nodes[-1] < 1.0
    # exact reflection symmetry, positive weights, total mass 2
    np.testing.assert_array_equal(rule.nodes, -rule.nodes[::-1])
    np.testing.assert_array_equal(rule.weights, rule.weights[::-1])
    assert np.all(rule.weights > 0)
    assert math.fsum(rule.weights) == pytest.approx(2.0, abs=1e-14)


def test_gl_monomial_exactness():
    rule = gauss_legendre(12)
    for k in range(24):  # exact through degree 2*order - 1
        exact = 0.0 if k % 2 else 2.0 / (k + 1)
        value = float(np.dot(rule.weights, rule.nodes ** k))
        assert value == pytest.approx(exact, abs=5e-14)


@given(
    order=st.integers(min_value=2, max_value=40),
    coeffs=st.lists(st.floats(min_value=-1.0, max_value=1.0), min_size=1,
                    max_size=18),
)
@settings(max_examples=60, deadline=None)
def test_gl_integrates_polynomials_exactly(order, coeffs):
    degree = len(coeffs) - 1
    if degree > 2 * order - 1:
        coeffs = coeffs[: 2 * order]
    poly = np.polynomial.Polynomial(coeffs)
    rule = gauss_legendre(order)
    value = float(np.dot(rule.weights, poly(rule.nodes)))
    exact = float(poly.integ()(1.0) - poly.integ()(-1.0))
    assert value == pytest.approx(exact, abs=1e-12)


def test_gl_matches_numpy_leggauss():
    nodes, weights = np.polynomial.legendre.leggauss(37)
    rule = gauss_legendre(37)
    np.testing.assert_allclose(rule.nodes, nodes, rtol=0, atol=1e-14)
    np.testing.assert_allclose(rule.weights, weights, rtol=0, atol=1e-14)


def test_gl_arrays_are_read_only():
    rule = gauss_legendre(8)
    with pytest.raises(ValueError):
        rule.nodes[0] = 0.0
    with pytest.raises(ValueError):
        rule.weights[0] = 0.0


def test_gl_caching_returns_same_object():
    assert gauss_legendre(33) is gauss_legendre(33)


@pytest.mark.parametrize("order", [0, -3, 4097, 2.5])
def test_gl_rejects_bad_orders(order):
    with pytest.raises(ArgumentError):
        gauss_legendre(order)


@pytest.mark.parametrize("func,bad", [
    (sine_integral, math.nan),
    (sine_integral, math.inf),
    (cin, math.nan),
    (erf, math.nan),
])
def test_special_functions_reject_non_finite(func, bad):
    with pytest.raises(ArgumentError):
        func(bad)
