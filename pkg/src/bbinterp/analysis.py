"""Lebesgue function, power function, optimal nodes and the flat limit.

Everything here uses the explicit first-order formulas. Between two
consecutive augmented nodes ``a = x^- <= x <= x^+ = b`` the power function is

    P(x)^2 = sinh(eps (x - a)) sinh(eps (b - x)) / (eps sinh(eps (b - a)))

which peaks at the gap midpoint with value ``tanh(eps (b - a) / 2) / (2 eps)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from bbinterp._backend import impl
from bbinterp.errors import BBInterpError
from bbinterp.interp import SampleData, interpolate
from bbinterp.kernel import KernelParams, _unit_array, require_order_one
from bbinterp.nodes import NodeSet

DEFAULT_GRID = 2048


@dataclass(frozen=True, eq=False)
class ProfileTable:
    """Sampled curve ``(x, value)`` over increasing abscissae."""

    abscissae: np.ndarray
    values: np.ndarray
    label: str
    eps: float | None = None

    def __post_init__(self):
        x = np.asarray(self.abscissae, dtype=float).ravel()
        v = np.asarray(self.values, dtype=float).ravel()
        if x.shape != v.shape:
            raise BBInterpError("abscissae and values differ in length")
        if np.any(np.diff(x) <= 0.0):
            raise BBInterpError("abscissae must be strictly increasing")
        object.__setattr__(self, "abscissae", x)
        object.__setattr__(self, "values", v)

    def __len__(self) -> int:
        return self.abscissae.shape[0]

    def max(self) -> float:
        return float(self.values.max())


def _grid_array(x) -> tuple[np.ndarray, bool]:
    arr = _unit_array(x, "x")
    return np.ascontiguousarray(arr.ravel()), arr.ndim == 0


def _unwrap(values: np.ndarray, scalar: bool):
    return float(values[0]) if scalar else values


def sup_grid(nodes: NodeSet, n: int = DEFAULT_GRID, include_nodes: bool = True) -> np.ndarray:
    """``n`` uniform interior points plus every gap midpoint (and the nodes)."""
    if n < 2:
        raise BBInterpError("grid needs at least 2 points")
    parts = [np.linspace(0.0, 1.0, n + 2)[1:-1], nodes.midpoints()]
    if include_nodes:
        parts.append(nodes.interior)
    return np.unique(np.concatenate(parts))


def fill_distance(nodes: NodeSet) -> float:
    """``max_x min_i |x - x_i|`` over (0, 1), with 0 and 1 counted as nodes."""
    return nodes.fill_distance()


def lebesgue_eval(params: KernelParams, nodes: NodeSet, x):
    """Closed-form Lebesgue function ``sum_i |l_i(x)|`` for ``eps > 0``.

    Inside ``[x_i, x_{i+1}]`` this is ``cosh(eps (x - m_i)) / cosh(eps h_i / 2)``,
    the same quantity as ``2 sinh(eps h_i/2)/sinh(eps h_i) * cosh(...)``.
    """
    require_order_one(params)
    if params.eps == 0.0:
        raise BBInterpError("eps = 0 has its own formula; use lebesgue_eval_flat")
    xs, scalar = _grid_array(x)
    return _unwrap(impl.lebesgue(nodes.augmented, params.eps, xs), scalar)


def lebesgue_eval_flat(nodes: NodeSet, x):
    """Lebesgue function of the hat basis: 1 on ``[x_1, x_N]``, linear ramps outside."""
    xs, scalar = _grid_array(x)
    return _unwrap(impl.lebesgue(nodes.augmented, 0.0, xs), scalar)


def lebesgue_function(params: KernelParams, nodes: NodeSet, x):
    """Dispatch to :func:`lebesgue_eval` or :func:`lebesgue_eval_flat`."""
    if params.eps == 0.0:
        require_order_one(params)
        return lebesgue_eval_flat(nodes, x)
    return lebesgue_eval(params, nodes, x)


def power_eval(params: KernelParams, nodes: NodeSet, x):
    """Closed-form power function; exactly 0 at the nodes and at 0, 1."""
    require_order_one(params)
    xs, scalar = _grid_array(x)
    return _unwrap(impl.power(nodes.augmented, params.eps, xs), scalar)


def _sup_from_fill(eps: float, h_x: float) -> float:
    if eps == 0.0:
        return float(np.sqrt(h_x / 2.0))
    return float(np.sqrt(np.tanh(eps * h_x) / (2.0 * eps)))


def power_sup(params: KernelParams, nodes: NodeSet) -> float:
    """``sqrt(tanh(eps h_X) / (2 eps))``, or ``sqrt(h_X / 2)`` at eps = 0."""
    require_order_one(params)
    return _sup_from_fill(params.eps, nodes.fill_distance())


def argmax_power(params: KernelParams, nodes: NodeSet, rtol: float = 1e-12) -> list[float]:
    """Midpoints of all gaps whose length equals the largest gap.

    Gap lengths of e.g. ``i/(N+1)`` nodes differ by rounding, so ties are
    taken up to the relative tolerance ``rtol``.
    """
    require_order_one(params)
    gaps = nodes.gaps
    ties = gaps >= gaps.max() * (1.0 - rtol)
    return [float(m) for m in nodes.midpoints()[ties]]


def optimal_nodes(n: int) -> NodeSet:
    """Equally spaced nodes, the unique minimizers of the power-function sup."""
    return NodeSet.equispaced(n)


def perturbed_nodes(n: int, rng: np.random.Generator, scale: float = 0.4) -> NodeSet:
    """Equispaced nodes moved independently by ``U(-scale, scale) / (n + 1)``.

    ``scale < 0.5`` keeps the perturbed nodes ordered and inside (0, 1).
    """
    if not 0.0 < scale < 0.5:
        raise BBInterpError("perturbation scale must lie in (0, 0.5)")
    base = NodeSet.equispaced(n).interior
    shift = rng.uniform(-scale, scale, size=n) / (n + 1)
    return NodeSet(base + shift)


def optimality_trials(
    n: int, eps: float, trials: int = 100, seed: int = 0, scale: float = 0.4
) -> list[tuple[int, float, float]]:
    """Rows ``(trial, perturbed_sup, equispaced_sup)`` from seeded perturbations."""
    params = KernelParams(1, eps)
    rng = np.random.default_rng(seed)
    ref = power_sup(params, optimal_nodes(n))
    return [
        (t, power_sup(params, perturbed_nodes(n, rng, scale)), ref) for t in range(trials)
    ]


def power_decay(eps: float, n_max: int = 1000) -> tuple[np.ndarray, np.ndarray]:
    """``power_sup`` for equispaced nodes, ``N = 1..n_max``."""
    if n_max < 1:
        raise BBInterpError("n_max must be >= 1")
    eps = KernelParams(1, eps).eps
    counts = np.arange(1, n_max + 1)
    h_x = 1.0 / (2.0 * (counts + 1))
    sups = np.array([_sup_from_fill(eps, h) for h in h_x])
    return counts, sups


def loglog_slope(x, y) -> float:
    """Least-squares slope of ``log y`` against ``log x``."""
    return float(np.polyfit(np.log(np.asarray(x, float)), np.log(np.asarray(y, float)), 1)[0])


def flat_limit_bound(eps: float, nodes: NodeSet) -> float:
    """Factor ``(8/3) eps^2 h_X^2`` bounding ``|I_eps f - I_0 f| / max|f(x_i)|``."""
    if not eps > 0.0:
        raise BBInterpError("flat_limit_bound needs eps > 0")
    return 8.0 / 3.0 * eps**2 * nodes.fill_distance() ** 2


def flat_limit_observed(eps: float, data: SampleData, grid=None) -> float:
    """Grid sup of ``|I_eps f - I_0 f|``; default grid from :func:`sup_grid`."""
    if not eps > 0.0:
        raise BBInterpError("flat_limit_observed needs eps > 0")
    xs = sup_grid(data.nodes) if grid is None else np.asarray(grid, dtype=float)
    diff = interpolate(KernelParams(1, eps), data, xs) - interpolate(KernelParams(1, 0.0), data, xs)
    return float(np.max(np.abs(diff)))


def profile(kind: str, params: KernelParams, nodes: NodeSet, grid: int = DEFAULT_GRID) -> ProfileTable:
    """Lebesgue or power function sampled on :func:`sup_grid`."""
    xs = sup_grid(nodes, grid)
    if kind == "lebesgue":
        values = lebesgue_function(params, nodes, xs)
    elif kind == "power":
        values = power_eval(params, nodes, xs)
    else:
        raise BBInterpError(f"unknown profile kind {kind!r}")
    return ProfileTable(xs, values, kind, params.eps)
