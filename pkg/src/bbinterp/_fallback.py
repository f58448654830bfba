"""Vectorized numpy implementation of the grid kernels.

Mirrors ``_core.pyx`` function by function. ``aug`` is always the augmented
node array ``[0, x_1, ..., x_N, 1]`` and ``xs`` a 1-D float array in [0, 1].
"""

from __future__ import annotations

import numpy as np

from bbinterp._hyp import cosh_ratio, sinh_product_ratio, sinh_ratio


def locate(aug, xs):
    """Index ``i`` in ``0..N`` with ``aug[i] <= x < aug[i+1]`` (x = 1 maps to N)."""
    n = aug.shape[0] - 2
    idx = np.searchsorted(aug, xs, side="right") - 1
    return np.clip(idx, 0, n).astype(np.intp)


def kernel_matrix(eps, xs, ys):
    lo = np.minimum.outer(xs, ys)
    hi = np.maximum.outer(xs, ys)
    if eps == 0.0:
        return lo - lo * hi
    return sinh_product_ratio(eps * lo, eps * (1.0 - hi), eps, eps * (lo - hi)) / eps


def cardinal_pairs(aug, eps, xs):
    n = aug.shape[0] - 2
    idx = locate(aug, xs)
    a = aug[idx]
    b = aug[idx + 1]
    h = b - a
    if eps == 0.0:
        left = (b - xs) / h
        right = (xs - a) / h
    else:
        left = sinh_ratio(eps * (b - xs), eps * h)
        right = sinh_ratio(eps * (xs - a), eps * h)
    left = np.where(idx == 0, 0.0, left)
    right = np.where(idx == n, 0.0, right)
    return idx, left, right


def lebesgue(aug, eps, xs):
    n = aug.shape[0] - 2
    idx = locate(aug, xs)
    a = aug[idx]
    b = aug[idx + 1]
    h = b - a
    if eps == 0.0:
        out = np.ones_like(xs)
        out = np.where(idx == 0, (xs - a) / h, out)
        out = np.where(idx == n, (b - xs) / h, out)
        return out
    d = 0.5 * ((xs - a) - (b - xs))
    out = cosh_ratio(eps * d, 0.5 * eps * h)
    out = np.where(idx == 0, sinh_ratio(eps * (xs - a), eps * h), out)
    out = np.where(idx == n, sinh_ratio(eps * (b - xs), eps * h), out)
    return out


def power(aug, eps, xs):
    idx = locate(aug, xs)
    a = aug[idx]
    b = aug[idx + 1]
    u = xs - a
    v = b - xs
    if eps == 0.0:
        p2 = u * v / (b - a)
    else:
        p2 = sinh_product_ratio(eps * u, eps * v, eps * (b - a), 0.0) / eps
    return np.sqrt(np.maximum(p2, 0.0))


def interpolate(aug, values, eps, xs):
    n = aug.shape[0] - 2
    idx, left, right = cardinal_pairs(aug, eps, xs)
    # pad with the zero boundary values f(0) = f(1) = 0
    padded = np.concatenate(([0.0], values, [0.0]))
    return left * padded[idx] + right * padded[np.minimum(idx + 1, n + 1)]
