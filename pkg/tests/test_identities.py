"""Hyperbolic identities used by the closed forms, and the stable ratio helpers."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bbinterp._hyp import cosh_ratio, sinh_product_ratio, sinh_ratio

RTOL = 1e-12


def lemma_residuals(a, b, c, d):
    """Relative residuals of the four identities, scaled by the largest term involved."""
    sh, ch = np.sinh, np.cosh
    tiny = np.finfo(float).tiny
    lhs1, rhs1 = sh(a) + sh(b), 2 * sh((a + b) / 2) * ch((a - b) / 2)
    r1 = abs(lhs1 - rhs1) / np.maximum.reduce([abs(sh(a)), abs(sh(b)), abs(rhs1), tiny + 0 * a])
    t1, t2 = sh(a - b) * sh(c - d), sh(a - c) * sh(b - d)
    rhs2 = sh(a - d) * sh(c - b)
    r2 = abs(t1 - t2 - rhs2) / np.maximum.reduce([abs(t1), abs(t2), abs(rhs2), tiny + 0 * a])
    u1, u2 = ch(a) * sh(b), sh(a) * ch(b)
    rhs3 = sh(b - a)
    r3 = abs(u1 - u2 - rhs3) / np.maximum.reduce([abs(u1), abs(u2), abs(rhs3), tiny + 0 * a])
    lhs4, rhs4 = sh(a / 2) ** 2 / sh(a), np.tanh(a / 2) / 2
    r4 = abs(lhs4 - rhs4) / abs(rhs4)
    return r1, r2, r3, r4


def test_difference_identity_sign(rng):
    # cosh(a) sinh(b) - sinh(a) cosh(b) is sinh(b - a); with the operands
    # swapped it is sinh(a - b). The power-function derivative relies on the former.
    a, b = rng.uniform(-5, 5, size=(2, 100))
    lhs = np.cosh(a) * np.sinh(b) - np.sinh(a) * np.cosh(b)
    np.testing.assert_allclose(lhs, np.sinh(b - a), rtol=1e-12, atol=1e-12)
    np.testing.assert_allclose(np.sinh(a) * np.cosh(b) - np.cosh(a) * np.sinh(b), np.sinh(a - b), rtol=1e-12, atol=1e-12)


def test_lemma_identities_random_quadruples(rng):
    a, b, c, d = rng.uniform(-5, 5, size=(4, 10_000))
    for k, r in enumerate(lemma_residuals(a, b, c, d), start=1):
        assert r.max() <= RTOL, f"identity {k}: {r.max():.3e}"


@given(st.floats(0, 50), st.floats(1e-6, 50))
def test_sinh_ratio_matches_numpy(a, b):
    expected = np.sinh(a) / np.sinh(b)
    assert sinh_ratio(a, b) == pytest.approx(expected, rel=1e-12, abs=1e-300)


@given(st.floats(0, 20), st.floats(0, 20), st.floats(1e-6, 40))
def test_sinh_product_ratio_matches_numpy(a, c, b):
    expected = np.sinh(a) * np.sinh(c) / np.sinh(b)
    assert sinh_product_ratio(a, c, b) == pytest.approx(expected, rel=1e-12, abs=1e-300)


@given(st.floats(-30, 30), st.floats(-30, 30))
def test_cosh_ratio_matches_numpy(a, b):
    assert cosh_ratio(a, b) == pytest.approx(np.cosh(a) / np.cosh(b), rel=1e-12)


def test_ratios_finite_far_beyond_sinh_overflow():
    with np.errstate(over="ignore"):
        assert not np.isfinite(np.sinh(800.0))
    assert sinh_ratio(799.0, 800.0) == pytest.approx(np.exp(-1.0), rel=1e-14)
    assert sinh_product_ratio(400.0, 400.0, 800.0) == pytest.approx(0.5, rel=1e-14)
    assert cosh_ratio(900.0, 901.0) == pytest.approx(np.exp(-1.0), rel=1e-14)
