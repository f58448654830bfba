"""Closed-form Brownian Bridge kernels on the unit interval.

Only the first-order kernel has a closed form here::

    k(x, y) = min(x, y) - x*y                                   eps = 0
    k(x, y) = sinh(eps*min) * sinh(eps*(1 - max)) / (eps*sinh(eps))  eps > 0

It is the Green kernel of ``-u'' + eps^2 u`` with homogeneous Dirichlet
conditions at 0 and 1, so it vanishes on the boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from bbinterp._backend import impl
from bbinterp._hyp import sinh_product_ratio
from bbinterp.errors import BBInterpError, UnsupportedOrderError

if TYPE_CHECKING:
    from bbinterp.nodes import NodeSet


# Below this the eps > 0 formulas agree with the eps = 0 ones to double
# precision (corrections are O(eps^2)), while eps*h starts to underflow.
FLAT_EPS = 1e-150


@dataclass(frozen=True)
class KernelParams:
    """Smoothness order ``beta`` and shape parameter ``eps`` of ``k_{beta,eps}``.

    ``eps`` below ``FLAT_EPS`` is stored as exactly 0.
    """

    beta: int = 1
    eps: float = 0.0

    def __post_init__(self):
        if isinstance(self.beta, bool) or int(self.beta) != self.beta or self.beta < 1:
            raise BBInterpError(f"beta must be a positive integer, got {self.beta!r}")
        eps = float(self.eps)
        if not math.isfinite(eps) or eps < 0:
            raise BBInterpError(f"eps must be finite and >= 0, got {self.eps!r}")
        object.__setattr__(self, "beta", int(self.beta))
        object.__setattr__(self, "eps", 0.0 if eps < FLAT_EPS else eps)


def require_order_one(params: KernelParams) -> None:
    if params.beta != 1:
        raise UnsupportedOrderError(
            f"closed form only available for beta=1, got beta={params.beta}"
        )


def _unit_array(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise BBInterpError(f"{name} must be finite")
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise BBInterpError(f"{name} must lie in [0, 1]")
    return arr


def kernel_eval(params: KernelParams, x: float, y: float) -> float:
    """Evaluate ``k_{1,eps}(x, y)`` for ``x, y`` in [0, 1]."""
    require_order_one(params)
    x = float(_unit_array(x, "x"))
    y = float(_unit_array(y, "y"))
    lo, hi = (x, y) if x <= y else (y, x)
    eps = params.eps
    if eps == 0.0:
        return lo - lo * hi
    return float(sinh_product_ratio(eps * lo, eps * (1.0 - hi), eps, eps * (lo - hi))) / eps


def kernel_matrix(params: KernelParams, xs, ys) -> np.ndarray:
    """Matrix ``K[i, j] = k(xs[i], ys[j])`` for 1-D point arrays."""
    require_order_one(params)
    xs = np.ascontiguousarray(_unit_array(xs, "xs").ravel())
    ys = np.ascontiguousarray(_unit_array(ys, "ys").ravel())
    return impl.kernel_matrix(params.eps, xs, ys)


def kernel_diagonal(params: KernelParams, xs) -> np.ndarray:
    """``k(x, x)`` for each x. The maximum, at x = 1/2, is tanh(eps/2)/(2*eps)."""
    require_order_one(params)
    xs = _unit_array(xs, "xs")
    eps = params.eps
    if eps == 0.0:
        return xs - xs * xs
    return sinh_product_ratio(eps * xs, eps * (1.0 - xs), eps, 0.0) / eps


def gram_matrix(params: KernelParams, nodes: "NodeSet") -> np.ndarray:
    """Gram matrix of the kernel translates centred at the interior nodes."""
    return kernel_matrix(params, nodes.interior, nodes.interior)
