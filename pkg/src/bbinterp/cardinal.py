"""Local Lagrange basis of the first-order Brownian Bridge kernel.

For ``eps > 0`` the i-th cardinal function is supported on
``[x_{i-1}, x_{i+1}]`` and reads::

    sinh(eps (x - x_{i-1})) / sinh(eps h_{i-1})    on [x_{i-1}, x_i)
    sinh(eps (x_{i+1} - x)) / sinh(eps h_i)        on [x_i, x_{i+1})

and for ``eps = 0`` it is the piecewise linear hat function on the same
support. No linear system is solved.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

import numpy as np

from bbinterp._backend import impl
from bbinterp._hyp import sinh_ratio
from bbinterp.errors import BBInterpError
from bbinterp.kernel import KernelParams, _unit_array, require_order_one
from bbinterp.nodes import NodeSet


def _ramp(eps: float, dist, width):
    """``sinh(eps*dist)/sinh(eps*width)``, or ``dist/width`` at eps = 0."""
    if eps == 0.0:
        return np.asarray(dist, dtype=float) / width
    return sinh_ratio(eps * np.asarray(dist, dtype=float), eps * np.asarray(width, dtype=float))


@dataclass(frozen=True)
class CardinalBasis:
    params: KernelParams
    nodes: NodeSet

    def __post_init__(self):
        require_order_one(self.params)

    @property
    def eps(self) -> float:
        return self.params.eps

    def __len__(self) -> int:
        return self.nodes.n

    def evaluate(self, i: int, x):
        """Value of the i-th (1-based) cardinal function at ``x`` (scalar or array)."""
        n = self.nodes.n
        if not 1 <= i <= n:
            raise IndexError(f"cardinal index {i} outside 1..{n}")
        x = _unit_array(x, "x")
        aug = self.nodes.augmented
        lo, mid, hi = aug[i - 1], aug[i], aug[i + 1]
        out = np.zeros_like(x)
        rising = (x >= lo) & (x < mid)
        falling = (x >= mid) & (x < hi)
        out = np.where(rising, _ramp(self.eps, np.where(rising, x - lo, 0.0), mid - lo), out)
        out = np.where(falling, _ramp(self.eps, np.where(falling, hi - x, 0.0), hi - mid), out)
        return float(out) if out.ndim == 0 else out

    def eval_all_nonzero(self, x: float) -> tuple[int, float, float]:
        """Interval index ``i`` (``x_i <= x < x_{i+1}``) and the values of
        the only two cardinal functions that can be nonzero there,
        ``l_i(x)`` and ``l_{i+1}(x)``.

        Slots for the non-existent ``l_0`` and ``l_{N+1}`` hold 0.
        """
        x = float(_unit_array(x, "x"))
        aug = self.nodes.augmented
        n = self.nodes.n
        i = min(bisect.bisect_right(aug, x) - 1, n)
        a, b = aug[i], aug[i + 1]
        left = float(_ramp(self.eps, b - x, b - a)) if i >= 1 else 0.0
        right = float(_ramp(self.eps, x - a, b - a)) if i < n else 0.0
        return i, left, right

    def pairs(self, xs) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Vectorized :meth:`eval_all_nonzero` over a 1-D grid."""
        xs = np.ascontiguousarray(_unit_array(xs, "xs").ravel())
        return impl.cardinal_pairs(self.nodes.augmented, self.eps, xs)

    def matrix(self, xs) -> np.ndarray:
        """Dense ``(len(xs), N)`` array of all cardinal functions on a grid."""
        xs = _unit_array(xs, "xs").ravel()
        return np.column_stack([self.evaluate(i, xs) for i in range(1, self.nodes.n + 1)])


def build_cardinal(params: KernelParams, nodes: NodeSet) -> CardinalBasis:
    if not isinstance(nodes, NodeSet):
        raise BBInterpError("nodes must be a NodeSet")
    return CardinalBasis(params, nodes)


def eval_cardinal(basis: CardinalBasis, i: int, x):
    return basis.evaluate(i, x)


def eval_all_nonzero(basis: CardinalBasis, x: float) -> tuple[int, float, float]:
    return basis.eval_all_nonzero(x)


def one_sided_coefficients(eps: float, h_prev: float, h_next: float) -> tuple[float, float]:
    """Coefficients ``(c1, c2)`` with ``l_i = c1 g_-(x_{i-1}, .) + c2 g_-(x_i, .)``.

    Obtained by forward substitution on the 2x2 cardinal-condition system.
    Only usable while ``sinh(eps*(h_prev + h_next))`` is representable.
    """
    c1 = eps / np.sinh(eps * h_prev)
    c2 = -eps * np.sinh(eps * (h_prev + h_next)) / (np.sinh(eps * h_prev) * np.sinh(eps * h_next))
    return float(c1), float(c2)
