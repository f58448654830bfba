"""The compiled core and the numpy fallback must agree on every kernel."""

import numpy as np
import pytest

from bbinterp import _backend, _fallback

from conftest import random_nodes

BACKENDS = _backend.available()
EPS = [0.0, 1e-4, 0.7, 10.0, 100.0, 500.0]

pytestmark = pytest.mark.skipif("cython" not in BACKENDS, reason="compiled core not built")


@pytest.fixture
def core():
    return BACKENDS["cython"]


@pytest.fixture
def setup(rng):
    nodes = random_nodes(rng, 37)
    xs = np.concatenate([rng.uniform(0, 1, 3000), nodes.augmented, nodes.midpoints()])
    return nodes, np.ascontiguousarray(xs)


def test_locate(core, setup):
    nodes, xs = setup
    np.testing.assert_array_equal(core.locate(nodes.augmented, xs), _fallback.locate(nodes.augmented, xs))


@pytest.mark.parametrize("eps", EPS)
def test_kernel_matrix(core, setup, eps):
    _, xs = setup
    a, b = xs[:200].copy(), xs[200:350].copy()
    np.testing.assert_allclose(core.kernel_matrix(eps, a, b), _fallback.kernel_matrix(eps, a, b), rtol=1e-13, atol=1e-300)


@pytest.mark.parametrize("eps", EPS)
def test_cardinal_pairs(core, setup, eps):
    nodes, xs = setup
    ci, cl, cr = core.cardinal_pairs(nodes.augmented, eps, xs)
    fi, fl, fr = _fallback.cardinal_pairs(nodes.augmented, eps, xs)
    np.testing.assert_array_equal(ci, fi)
    np.testing.assert_allclose(cl, fl, rtol=1e-13, atol=1e-300)
    np.testing.assert_allclose(cr, fr, rtol=1e-13, atol=1e-300)


@pytest.mark.parametrize("name", ["lebesgue", "power"])
@pytest.mark.parametrize("eps", EPS)
def test_profiles(core, setup, name, eps):
    nodes, xs = setup
    got = getattr(core, name)(nodes.augmented, eps, xs)
    want = getattr(_fallback, name)(nodes.augmented, eps, xs)
    np.testing.assert_allclose(got, want, rtol=1e-13, atol=1e-300)


@pytest.mark.parametrize("eps", EPS)
def test_interpolate(core, setup, eps, rng):
    nodes, xs = setup
    values = rng.normal(size=nodes.n)
    np.testing.assert_allclose(
        core.interpolate(nodes.augmented, values, eps, xs),
        _fallback.interpolate(nodes.augmented, values, eps, xs),
        rtol=1e-13,
        atol=1e-15,
    )


def test_env_var_forces_fallback(monkeypatch):
    monkeypatch.setenv("BBINTERP_BACKEND", "python")
    impl, name = _backend._select()
    assert impl is _fallback and name == "python"
