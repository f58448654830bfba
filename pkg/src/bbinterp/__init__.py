"""Interpolation with first-order Brownian Bridge kernels on (0, 1).

The cardinal (Lagrange) basis is known in closed form, so interpolants,
Lebesgue functions and power functions are evaluated without solving any
linear system. A dense Gram-matrix solve is kept as an independent check.
"""

from bbinterp._backend import BACKEND
from bbinterp.analysis import (
    ProfileTable,
    argmax_power,
    fill_distance,
    flat_limit_bound,
    flat_limit_observed,
    lebesgue_eval,
    lebesgue_eval_flat,
    lebesgue_function,
    optimal_nodes,
    power_eval,
    power_sup,
)
from bbinterp.cardinal import CardinalBasis, build_cardinal, eval_all_nonzero, eval_cardinal
from bbinterp.errors import BBInterpError, IllConditionedError, UnsupportedOrderError
from bbinterp.interp import GramInterpolant, SampleData, gram_interpolate, interpolate
from bbinterp.kernel import KernelParams, gram_matrix, kernel_eval, kernel_matrix
from bbinterp.nodes import NodeSet
from bbinterp.nullspace import FundamentalSolution, NullSpaceBasis, wronskian_matrix

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BBInterpError",
    "CardinalBasis",
    "FundamentalSolution",
    "GramInterpolant",
    "IllConditionedError",
    "KernelParams",
    "NodeSet",
    "NullSpaceBasis",
    "ProfileTable",
    "SampleData",
    "UnsupportedOrderError",
    "argmax_power",
    "build_cardinal",
    "eval_all_nonzero",
    "eval_cardinal",
    "fill_distance",
    "flat_limit_bound",
    "flat_limit_observed",
    "gram_interpolate",
    "gram_matrix",
    "interpolate",
    "kernel_eval",
    "kernel_matrix",
    "lebesgue_eval",
    "lebesgue_eval_flat",
    "lebesgue_function",
    "optimal_nodes",
    "power_eval",
    "power_sup",
    "wronskian_matrix",
]
