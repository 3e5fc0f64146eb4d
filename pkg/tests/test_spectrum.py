"""Sinc-kernel eigenproblem: operator assembly, eigenvalues, interpolation."""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sincbound.errors import ArgumentError, NumericError
from sincbound.specfun import gauss_legendre
from sincbound.spectrum import (
    build_operator,
    eigenfunction_interpolate,
    kernel_eval,
    lambda0,
    suggested_order,
    top_eigenvalues,
)

# Off-diagonal entry of the 2-point Nystrom matrix at xi = 1, worked by
# hand: nodes +-1/sqrt(3), unit weights, so K(2/sqrt(3)) =
# sqrt(3)*sin(pi/sqrt(3))/(2*pi).
HAND_OFFDIAG = 0.26756536177719265


# ---------------------------------------------------------------------------
# kernel and operator assembly
# ---------------------------------------------------------------------------

def test_kernel_at_zero_is_half_xi():
    assert kernel_eval(1.7, 0.0) == 0.85
    assert kernel_eval(0.0, 0.3) == 0.0


@given(xi=st.floats(min_value=0.0, max_value=12.0),
       u=st.floats(min_value=-4.0, max_value=4.0))
@settings(max_examples=100, deadline=None)
def test_kernel_even_and_bounded(xi, u):
    assert kernel_eval(xi, u) == kernel_eval(xi, -u)
    assert abs(kernel_eval(xi, u)) <= xi / 2.0 + 1e-15


def test_operator_two_point_hand_value():
    m = build_operator(1.0, gauss_legendre(2))
    expected = np.array([[0.5, HAND_OFFDIAG], [HAND_OFFDIAG, 0.5]])
    np.testing.assert_allclose(m, expected, rtol=0, atol=1e-15)


def test_operator_exactly_symmetric():
    m = build_operator(1.3, gauss_legendre(63))
    np.testing.assert_array_equal(m, m.T)


@pytest.mark.parametrize("xi", [0.1, 1.0, 3.7])
def test_operator_trace_is_xi(xi):
    m = build_operator(xi, gauss_legendre(96))
    assert np.trace(m) == pytest.approx(xi, rel=1e-14)


# ---------------------------------------------------------------------------
# lambda0 anchors
# ---------------------------------------------------------------------------

def test_lambda0_at_one():
    assert lambda0(1.0) == pytest.approx(0.7833687892, abs=1e-8)


def test_lambda0_at_inverse_two_pi():
    assert lambda0(1.0 / (2.0 * math.pi)) == pytest.approx(0.1580567274, abs=1e-8)


def test_lambda0_at_two():
    assert lambda0(2.0) == pytest.approx(0.9810462778, abs=1e-8)


def test_lambda0_tiny_xi_sits_just_below_xi():
    gap = 0.001 - lambda0(0.001)
    assert 2e-10 < gap < 4e-10


def test_lambda0_at_zero_is_exactly_zero():
    assert lambda0(0.0) == 0.0


def test_lambda0_strictly_increasing():
    xis = np.arange(0.2, 4.01, 0.2)
    values = [lambda0(x) for x in xis]
    assert all(b > a for a, b in zip(values, values[1:]))


@given(st.floats(min_value=0.01, max_value=6.0))
@settings(max_examples=25, deadline=None)
def test_lambda0_strictly_inside_unit_interval(xi):
    value = lambda0(xi)
    assert 0.0 < value < 1.0


# ---------------------------------------------------------------------------
# full eigensystem
# ---------------------------------------------------------------------------

def test_eigenvalues_descending_and_positive():
    result = top_eigenvalues(1.0, 64, 6)
    lam = result.eigenvalues
    assert np.all(np.diff(lam) < 0)
    assert np.all(lam > 0)


def test_spectral_mass_concentrates_in_leading_modes():
    for xi in (0.5, 1.0, 2.0, 4.0):
        result = top_eigenvalues(xi, suggested_order(xi), 20)
        assert float(np.sum(result.eigenvalues)) == pytest.approx(xi, abs=1e-8)


def test_ground_state_even_positive_first_mode_odd():
    result = top_eigenvalues(1.0, 64, 3)
    psi0 = result.eigenfunctions[0]
    psi1 = result.eigenfunctions[1]
    assert np.all(psi0 > 0)  # nodeless ground state
    np.testing.assert_allclose(psi0, psi0[::-1], rtol=0, atol=1e-9)
    np.testing.assert_allclose(psi1, -psi1[::-1], rtol=0, atol=1e-9)
    # odd mode rises through zero at the center
    first_pos = np.searchsorted(result.rule.nodes, 0.0)
    assert psi1[first_pos] > 0


def test_eigenfunctions_unit_normalized_under_rule():
    result = top_eigenvalues(1.5, 64, 4)
    w = result.rule.weights
    for psi in result.eigenfunctions:
        assert float(np.dot(w, psi * psi)) == pytest.approx(1.0, abs=1e-12)


def test_convergence_delta_reported_and_small():
    result = top_eigenvalues(1.0, 64, 2, tol=1e-10)
    assert result.order == 128
    assert result.convergence_delta is not None
    assert 0.0 <= result.convergence_delta <= 1e-10


def test_tol_none_gives_raw_single_order():
    result = top_eigenvalues(1.0, 48, 2, tol=None)
    assert result.order == 48
    assert result.convergence_delta is None


def test_unconverged_order_raises():
    # 4 points cannot resolve the xi = 6 spectrum; doubling moves it a lot.
    with pytest.raises(NumericError):
        top_eigenvalues(6.0, 4, 2, tol=1e-12)


def test_interpolation_reproduces_node_samples():
    result = top_eigenvalues(1.0, 64, 2)
    x = result.rule.nodes
    np.testing.assert_allclose(
        eigenfunction_interpolate(result, 0, x), result.eigenfunctions[0],
        rtol=0, atol=1e-10)


def test_interpolation_scalar_in_scalar_out():
    result = top_eigenvalues(1.0, 64, 1)
    value = eigenfunction_interpolate(result, 0, 0.25)
    assert isinstance(value, float)


def test_interpolation_agrees_between_orders_off_nodes():
    # The interpolant is a property of the operator, not of the grid:
    # two different discretizations must produce the same function.
    xs = np.linspace(-0.95, 0.95, 17)
    coarse = top_eigenvalues(1.0, 48, 1, tol=None)
    fine = top_eigenvalues(1.0, 96, 1, tol=None)
    np.testing.assert_allclose(
        eigenfunction_interpolate(coarse, 0, xs),
        eigenfunction_interpolate(fine, 0, xs),
        rtol=0, atol=1e-10)


def test_interpolation_rejects_bad_mode_and_points():
    result = top_eigenvalues(1.0, 64, 2)
    with pytest.raises(ArgumentError):
        eigenfunction_interpolate(result, 7, 0.0)
    with pytest.raises(ArgumentError):
        eigenfunction_interpolate(result, 0, math.nan)


def test_xi_zero_spectrum_is_trivial():
    result = top_eigenvalues(0.0, 32, 3)
    assert np.all(result.eigenvalues == 0.0)


# ---------------------------------------------------------------------------
# argument validation
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("xi", [-0.5, math.nan, math.inf])
def test_lambda0_rejects_bad_xi(xi):
    with pytest.raises(ArgumentError):
        lambda0(xi)


@pytest.mark.parametrize("order,count", [(0, 1), (4097, 1), (64, 0), (64, 65),
                                         (2.5, 1), (64, 1.5)])
def test_top_eigenvalues_rejects_bad_shapes(order, count):
    with pytest.raises(ArgumentError):
        top_eigenvalues(1.0, order, count)


def test_suggested_order_scales_with_xi():
    assert suggested_order(0.1) == 64
    assert suggested_order(8.0) == 120
    assert suggested_order(1.0) >= 50
