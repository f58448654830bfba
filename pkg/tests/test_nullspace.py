import math

import numpy as np
import pytest
from mpmath import mp, mpf, sinh

from bbinterp.errors import BBInterpError
from bbinterp.nullspace import FundamentalSolution, NullSpaceBasis, wronskian_matrix

T_VALUES = np.arange(1, 10) / 10


def test_basis_size():
    for beta in (1, 2, 3, 4):
        assert NullSpaceBasis(beta, 1.0).size == 2 * beta


def test_rejects_flat_case():
    with pytest.raises(BBInterpError):
        NullSpaceBasis(1, 0.0)


@pytest.mark.parametrize("beta", [1, 2, 3])
@pytest.mark.parametrize("eps", [0.5, 1.0, 10.0])
def test_derivatives_match_finite_differences(beta, eps):
    basis = NullSpaceBasis(beta, eps)
    step = 1e-6
    for j in range(1, basis.size + 1):
        for order in range(basis.size - 1):
            for x in (0.2, 0.55, 0.9):
                fd = (basis.evaluate(j, x + step, order) - basis.evaluate(j, x - step, order)) / (2 * step)
                exact = basis.evaluate(j, x, order + 1)
                assert fd == pytest.approx(exact, rel=1e-6, abs=1e-6 * max(1.0, abs(exact)))


def test_wronskian_order_one():
    eps, t = 1.7, 0.4
    w = wronskian_matrix(NullSpaceBasis(1, eps), t)
    expected = [[math.exp(eps * t), math.exp(-eps * t)], [eps * math.exp(eps * t), -eps * math.exp(-eps * t)]]
    np.testing.assert_allclose(w, expected, rtol=1e-15)


def test_wronskian_at_zero():
    np.testing.assert_array_equal(wronskian_matrix(NullSpaceBasis(1, 1.0), 0.0), [[1, 1], [1, -1]])


def test_wronskian_order_two_invertible():
    w = wronskian_matrix(NullSpaceBasis(2, 1.0), 0.5)
    assert w.shape == (4, 4)
    assert abs(np.linalg.det(w)) > 1e-3


def test_b_order_one_closed_form():
    fund = FundamentalSolution(1, 2.0)
    b = fund.solve_b(0.5)
    # generic LAPACK solve of the unscaled 2x2 system as a second route
    direct = np.linalg.solve(wronskian_matrix(fund.basis, 0.5), [0.0, -1.0])
    expected = np.array([-math.exp(-1.0), math.exp(1.0)]) / 4
    np.testing.assert_allclose(b, expected, rtol=1e-12)
    np.testing.assert_allclose(direct, expected, rtol=1e-12)


@pytest.mark.parametrize("eps", [0.3, 1.0, 25.0])
def test_b_order_one_formula(eps):
    fund = FundamentalSolution(1, eps)
    for t in T_VALUES:
        expected = np.array([-math.exp(-eps * t), math.exp(eps * t)]) / (2 * eps)
        np.testing.assert_allclose(fund.solve_b(t), expected, rtol=1e-12)


def test_b_order_two_residual():
    fund = FundamentalSolution(2, 1.0)
    b = fund.solve_b(0.3)
    w = wronskian_matrix(fund.basis, 0.3)
    assert np.linalg.norm(w @ b - np.array([0, 0, 0, 1.0])) <= 1e-10


@pytest.mark.parametrize("beta", [1, 2, 3])
def test_rhs_sign(beta):
    assert FundamentalSolution(beta, 1.0).rhs[-1] == (-1) ** beta


def test_g_vanishes_on_diagonal():
    for eps in (0.5, 4.0):
        assert FundamentalSolution(1, eps).g_eval(0.37, 0.37) == pytest.approx(0.0, abs=1e-15)


def test_g_order_one_value():
    mp.dps = 30
    assert FundamentalSolution(1, 1.0).g_eval(0.75, 0.25) == pytest.approx(float(sinh(mpf("0.5"))), rel=1e-12)
    assert float(sinh(mpf("0.5"))) == pytest.approx(0.521095305493747, rel=1e-14)


def test_g_antisymmetric_order_one(rng):
    fund = FundamentalSolution(1, 3.0)
    for t, x in rng.uniform(0, 1, size=(50, 2)):
        assert fund.g_eval(t, x) == pytest.approx(-fund.g_eval(x, t), rel=1e-12, abs=1e-15)


@pytest.mark.parametrize("beta", [1, 2, 3])
@pytest.mark.parametrize("eps", [0.5, 1.0, 10.0])
def test_g_knot_conditions_exact_derivatives(beta, eps):
    fund = FundamentalSolution(beta, eps)
    for t in (0.1, 0.5, 0.9):
        for order in range(2 * beta - 1):
            assert fund.g_eval(t, t, order) == pytest.approx(0.0, abs=1e-9)
        assert fund.g_eval(t, t, 2 * beta - 1) == pytest.approx((-1) ** beta, rel=1e-9)


def test_g_order_two_first_derivative_fd():
    fund = FundamentalSolution(2, 1.0)
    t, step = 0.4, 1e-5
    fd = (fund.g_eval(t, t + step) - fund.g_eval(t, t - step)) / (2 * step)
    assert abs(fd) <= 1e-6


@pytest.mark.parametrize("beta", [2, 3])
def test_g_top_derivative_fd(beta):
    # D^(2beta-1) g at the knot by differencing the exact D^(2beta-2)
    fund = FundamentalSolution(beta, 1.0)
    t, step = 0.6, 1e-5
    top = 2 * beta - 1
    fd = (fund.g_eval(t, t + step, top - 1) - fund.g_eval(t, t - step, top - 1)) / (2 * step)
    assert fd == pytest.approx((-1) ** beta, rel=1e-6)


def test_one_sided_splines():
    fund = FundamentalSolution(1, 1.0)
    assert fund.g_plus(0.4, 0.4) == 0.0
    assert fund.g_minus(0.4, 0.4) == 0.0
    assert fund.g_minus(0.2, 0.6) == pytest.approx(math.sinh(0.4), rel=1e-12)
    assert fund.g_plus(0.2, 0.6) == 0.0
    assert fund.g_plus(0.6, 0.2) == pytest.approx(math.sinh(0.4), rel=1e-12)
    assert fund.g_minus(0.6, 0.2) == 0.0


def test_order_one_grid_matches_sinh():
    grid = np.linspace(0.01, 0.99, 50)
    for eps in (0.5, 1.0, 10.0):
        fund = FundamentalSolution(1, eps)
        for t in grid:
            for x in grid:
                exact = math.sinh(eps * (t - x)) / eps
                assert fund.g_eval(t, x) == pytest.approx(exact, rel=1e-12, abs=1e-15)


@pytest.mark.parametrize("t", [-0.1, 1.1, float("nan")])
def test_rejects_bad_t(t):
    with pytest.raises(BBInterpError):
        FundamentalSolution(1, 1.0).solve_b(t)
