import numpy as np
import pytest

from bbinterp import _backend
from bbinterp.nodes import NodeSet


def random_nodes(rng, n, min_gap=0.0):
    """Sorted uniform nodes in (0, 1); redrawn until every gap exceeds ``min_gap``."""
    while True:
        x = np.sort(rng.uniform(0.0, 1.0, size=n))
        gaps = np.diff(np.concatenate(([0.0], x, [1.0])))
        if gaps.min() > min_gap:
            return NodeSet(x)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(params=sorted(_backend.available()))
def backend(request):
    return _backend.available()[request.param]


def separated_nodes(rng, n, jitter=0.35):
    """Equispaced nodes jittered by up to ``jitter / (n + 1)``; gaps stay >= (1 - 2 jitter)/(n + 1)."""
    base = np.arange(1, n + 1) / (n + 1)
    return NodeSet(base + rng.uniform(-jitter, jitter, size=n) / (n + 1))
