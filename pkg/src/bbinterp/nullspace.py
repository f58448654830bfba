"""Null space of ``(-D^2 + eps^2)^beta`` and the one-sided splines built from it.

For ``eps > 0`` the characteristic roots are ``+eps`` and ``-eps``, each with
multiplicity ``beta``, giving the basis::

    u_j(x)      = x^(j-1) * exp(+eps x),   j = 1..beta
    u_{beta+j}  = x^(j-1) * exp(-eps x),   j = 1..beta

The fundamental function ``g(t, x) = sum_j b_j(t) u_j(x)`` has derivatives
of order ``0..2beta-2`` vanishing at ``x = t`` and a ``(2beta-1)``-th
derivative equal to ``(-1)^beta`` there; ``b(t)`` solves the Wronskian
system ``W(t) b(t) = e``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from bbinterp.errors import BBInterpError, IllConditionedError


def _check_point(v: float, name: str) -> float:
    v = float(v)
    if not math.isfinite(v) or v < 0.0 or v > 1.0:
        raise BBInterpError(f"{name} must lie in [0, 1], got {v!r}")
    return v


def _poly_factor(p: int, s: float, x: float, order: int) -> float:
    """``exp(-s x) * D^order [x^p exp(s x)]`` by the Leibniz rule."""
    total = 0.0
    for m in range(min(order, p) + 1):
        falling = math.perm(p, m)
        total += math.comb(order, m) * falling * x ** (p - m) * s ** (order - m)
    return total


@dataclass(frozen=True)
class NullSpaceBasis:
    """The ``2*beta`` exponential-polynomial solutions of the homogeneous equation."""

    beta: int
    eps: float

    def __post_init__(self):
        if isinstance(self.beta, bool) or int(self.beta) != self.beta or self.beta < 1:
            raise BBInterpError(f"beta must be a positive integer, got {self.beta!r}")
        eps = float(self.eps)
        if not math.isfinite(eps) or eps <= 0.0:
            raise BBInterpError("the null-space construction needs eps > 0")
        object.__setattr__(self, "beta", int(self.beta))
        object.__setattr__(self, "eps", eps)

    @property
    def size(self) -> int:
        return 2 * self.beta

    def _exponent(self, j: int) -> tuple[int, float]:
        """Power ``p`` and rate ``s`` of ``u_j = x^p exp(s x)`` (1-based ``j``)."""
        if not 1 <= j <= self.size:
            raise IndexError(f"basis index {j} outside 1..{self.size}")
        if j <= self.beta:
            return j - 1, self.eps
        return j - self.beta - 1, -self.eps

    def evaluate(self, j: int, x: float, order: int = 0) -> float:
        """Derivative of order ``order`` of ``u_j`` at ``x``."""
        p, s = self._exponent(j)
        return _poly_factor(p, s, x, order) * math.exp(s * x)


def wronskian_matrix(basis: NullSpaceBasis, t: float) -> np.ndarray:
    """``W[i, j] = D^i u_{j+1}(t)`` for derivative orders ``i = 0..2beta-1``."""
    t = _check_point(t, "t")
    size = basis.size
    w = np.empty((size, size))
    for j in range(size):
        for i in range(size):
            w[i, j] = basis.evaluate(j + 1, t, i)
    return w


class FundamentalSolution:
    """Coefficients ``b(t)`` and the function ``g(t, x)`` for given ``beta, eps``.

    Internally the Wronskian columns are scaled by ``exp(-s_j t)`` so the
    solve only sees polynomial entries; ``g`` is then evaluated through
    ``exp(s_j (x - t))`` and never forms ``exp(eps t)`` on its own.
    """

    def __init__(self, beta: int, eps: float):
        self.basis = NullSpaceBasis(beta, eps)
        self.rhs = np.zeros(self.basis.size)
        self.rhs[-1] = (-1.0) ** self.basis.beta

    @property
    def beta(self) -> int:
        return self.basis.beta

    @property
    def eps(self) -> float:
        return self.basis.eps

    def _scaled_coefficients(self, t: float) -> np.ndarray:
        size = self.basis.size
        w = np.empty((size, size))
        for j in range(size):
            p, s = self.basis._exponent(j + 1)
            for i in range(size):
                w[i, j] = _poly_factor(p, s, t, i)
        try:
            # LAPACK gesv: LU with partial pivoting
            coeffs = np.linalg.solve(w, self.rhs)
        except np.linalg.LinAlgError as exc:
            raise IllConditionedError(f"singular Wronskian system at t={t}") from exc
        if not np.all(np.isfinite(coeffs)):
            raise IllConditionedError(f"non-finite Wronskian solution at t={t}")
        return coeffs

    def solve_b(self, t: float) -> np.ndarray:
        """The coefficient vector ``b(t)`` in the original basis."""
        t = _check_point(t, "t")
        scaled = self._scaled_coefficients(t)
        rates = np.array([self.basis._exponent(j + 1)[1] for j in range(self.basis.size)])
        return scaled * np.exp(-rates * t)

    def g_eval(self, t: float, x: float, order: int = 0) -> float:
        """``D_x^order g(t, x)``."""
        t = _check_point(t, "t")
        x = _check_point(x, "x")
        scaled = self._scaled_coefficients(t)
        total = 0.0
        for j in range(self.basis.size):
            p, s = self.basis._exponent(j + 1)
            total += scaled[j] * _poly_factor(p, s, x, order) * math.exp(s * (x - t))
        return total

    def g_plus(self, t: float, x: float) -> float:
        """``g(t, x)`` for ``t > x``, else 0."""
        return self.g_eval(t, x) if t > x else 0.0

    def g_minus(self, t: float, x: float) -> float:
        """``g(x, t)`` for ``t < x``, else 0 (note the swapped arguments)."""
        return self.g_eval(x, t) if t < x else 0.0


def solve_b(fund: FundamentalSolution, t: float) -> np.ndarray:
    return fund.solve_b(t)


def g_eval(fund: FundamentalSolution, t: float, x: float) -> float:
    return fund.g_eval(t, x)


def g_plus(fund: FundamentalSolution, t: float, x: float) -> float:
    return fund.g_plus(t, x)


def g_minus(fund: FundamentalSolution, t: float, x: float) -> float:
    return fund.g_minus(t, x)
