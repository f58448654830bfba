"""Overflow-safe ratios of hyperbolic functions.

All helpers factor ``sinh(a) = -exp(a) * expm1(-2a) / 2`` so that the large
exponentials cancel before they are formed. Arguments are nonnegative; the
results stay finite for shape parameters far beyond the point where
``numpy.sinh`` overflows (``|a| > ~710``).
"""

from __future__ import annotations

import numpy as np


def sinh_ratio(a, b):
    """Return ``sinh(a) / sinh(b)`` for ``a >= 0`` and ``b > 0``."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return np.exp(a - b) * np.expm1(-2.0 * a) / np.expm1(-2.0 * b)


def sinh_product_ratio(a, c, b, shift=None):
    """Return ``sinh(a) * sinh(c) / sinh(b)`` for ``a, c >= 0`` and ``b > 0``.

    ``shift`` is ``a + c - b``. Callers that know it in closed form should
    pass it: forming it from large ``a, b, c`` loses ~1e-14 relative accuracy.
    """
    a = np.asarray(a, dtype=float)
    c = np.asarray(c, dtype=float)
    b = np.asarray(b, dtype=float)
    shift = a + c - b if shift is None else np.asarray(shift, dtype=float)
    return -0.5 * np.exp(shift) * np.expm1(-2.0 * a) * np.expm1(-2.0 * c) / np.expm1(-2.0 * b)


def cosh_ratio(a, b):
    """Return ``cosh(a) / cosh(b)``; arguments of any sign."""
    a = np.abs(np.asarray(a, dtype=float))
    b = np.abs(np.asarray(b, dtype=float))
    return np.exp(a - b) * (1.0 + np.exp(-2.0 * a)) / (1.0 + np.exp(-2.0 * b))
