"""Kernel interpolation through the cardinal form, plus a Gram-solve oracle."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from bbinterp._backend import impl
from bbinterp.cardinal import CardinalBasis
from bbinterp.errors import BBInterpError, IllConditionedError
from bbinterp.kernel import KernelParams, _unit_array, gram_matrix, kernel_matrix, require_order_one
from bbinterp.nodes import NodeSet


@dataclass(frozen=True, eq=False)
class SampleData:
    """Function values at the interior nodes. Boundary values are implicitly 0."""

    nodes: NodeSet
    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float).ravel()
        if v.shape[0] != self.nodes.n:
            raise BBInterpError(
                f"got {v.shape[0]} values for {self.nodes.n} nodes"
            )
        if not np.all(np.isfinite(v)):
            raise BBInterpError("sample values must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @classmethod
    def from_function(cls, nodes: NodeSet, f) -> "SampleData":
        return cls(nodes, np.asarray(f(nodes.interior), dtype=float))

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.values)))


def interpolate(params: KernelParams, data: SampleData, x):
    """Evaluate ``sum_i f(x_i) l_i(x)`` using only the two local cardinal values.

    Scalar ``x`` goes through :meth:`CardinalBasis.eval_all_nonzero`
    (one binary search); arrays go through the grid backend.
    """
    require_order_one(params)
    basis = CardinalBasis(params, data.nodes)
    if np.ndim(x) == 0:
        i, left, right = basis.eval_all_nonzero(x)
        total = 0.0
        if i >= 1:
            total += data.values[i - 1] * left
        if i < data.nodes.n:
            total += data.values[i] * right
        return total
    xs = np.ascontiguousarray(_unit_array(x, "x").ravel())
    return impl.interpolate(data.nodes.augmented, data.values, params.eps, xs)


class GramInterpolant:
    """Interpolant ``sum_j a_j k(., x_j)`` with ``K a = f`` solved densely.

    The factorization is done once here; evaluation is read-only.
    """

    def __init__(self, params: KernelParams, data: SampleData, rtol: float = 1e-8):
        require_order_one(params)
        self.params = params
        self.data = data
        gram = gram_matrix(params, data.nodes)
        f = data.values
        try:
            factor = scipy.linalg.cho_factor(gram, lower=True, check_finite=True)
            coeffs = scipy.linalg.cho_solve(factor, f)
            self.method = "cholesky"
        except (np.linalg.LinAlgError, ValueError):
            try:
                lu = scipy.linalg.lu_factor(gram)
                coeffs = scipy.linalg.lu_solve(lu, f)
            except (np.linalg.LinAlgError, ValueError) as exc:
                raise IllConditionedError("Gram matrix factorization failed") from exc
            self.method = "lu"
        residual = np.linalg.norm(gram @ coeffs - f)
        if not np.isfinite(residual) or residual > rtol * max(np.linalg.norm(f), np.finfo(float).tiny):
            raise IllConditionedError(
                f"Gram solve residual {residual:.3e} exceeds {rtol:g} * ||f||"
            )
        self.gram = gram
        self.coeffs = coeffs

    def __call__(self, x):
        xs = np.atleast_1d(np.asarray(x, dtype=float))
        out = kernel_matrix(self.params, xs, self.data.nodes.interior) @ self.coeffs
        return float(out[0]) if np.ndim(x) == 0 else out


def gram_interpolate(params: KernelParams, data: SampleData, x):
    return GramInterpolant(params, data)(x)
