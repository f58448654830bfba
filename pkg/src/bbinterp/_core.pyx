# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled grid kernels.

Same contracts as ``bbinterp._fallback``; every loop body is one binary
search over the augmented nodes plus O(1) hyperbolic arithmetic.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport exp, expm1, fabs, sqrt

cnp.import_array()


cdef inline Py_ssize_t _locate(const double[::1] aug, double x) noexcept nogil:
    cdef Py_ssize_t n = aug.shape[0] - 2
    cdef Py_ssize_t lo = 0, hi = n + 1, mid
    if x >= aug[n]:
        return n
    # invariant: aug[lo] <= x < aug[hi]
    while hi - lo > 1:
        mid = (lo + hi) >> 1
        if aug[mid] <= x:
            lo = mid
        else:
            hi = mid
    return lo


cdef inline double _sinh_ratio(double a, double b) noexcept nogil:
    return exp(a - b) * expm1(-2.0 * a) / expm1(-2.0 * b)


cdef inline double _sinh_product_ratio(double a, double c, double b, double shift) noexcept nogil:
    # shift = a + c - b, supplied in closed form by the caller
    return -0.5 * exp(shift) * expm1(-2.0 * a) * expm1(-2.0 * c) / expm1(-2.0 * b)


cdef inline double _cosh_ratio(double a, double b) noexcept nogil:
    a = fabs(a)
    b = fabs(b)
    return exp(a - b) * (1.0 + exp(-2.0 * a)) / (1.0 + exp(-2.0 * b))


def locate(const double[::1] aug, const double[::1] xs):
    cdef Py_ssize_t m = xs.shape[0], k
    out = np.empty(m, dtype=np.intp)
    cdef cnp.intp_t[::1] o = out
    with nogil:
        for k in range(m):
            o[k] = _locate(aug, xs[k])
    return out


def kernel_matrix(double eps, const double[::1] xs, const double[::1] ys):
    cdef Py_ssize_t m = xs.shape[0], n = ys.shape[0], i, j
    cdef double lo, hi, scale
    out = np.empty((m, n), dtype=np.float64)
    cdef double[:, ::1] o = out
    if eps == 0.0:
        with nogil:
            for i in range(m):
                for j in range(n):
                    lo = xs[i] if xs[i] <= ys[j] else ys[j]
                    hi = ys[j] if xs[i] <= ys[j] else xs[i]
                    o[i, j] = lo - lo * hi
        return out
    # per-point factors expm1(-2 eps x) and expm1(-2 eps (1 - x)); one exp per entry
    xa = np.empty(m)
    xb = np.empty(m)
    ya = np.empty(n)
    yb = np.empty(n)
    cdef double[::1] xl = xa, xr = xb, yl = ya, yr = yb
    scale = -0.5 / (expm1(-2.0 * eps) * eps)
    with nogil:
        for i in range(m):
            xl[i] = expm1(-2.0 * eps * xs[i])
            xr[i] = expm1(-2.0 * eps * (1.0 - xs[i]))
        for j in range(n):
            yl[j] = expm1(-2.0 * eps * ys[j])
            yr[j] = expm1(-2.0 * eps * (1.0 - ys[j]))
        for i in range(m):
            for j in range(n):
                if xs[i] <= ys[j]:
                    o[i, j] = scale * exp(eps * (xs[i] - ys[j])) * xl[i] * yr[j]
                else:
                    o[i, j] = scale * exp(eps * (ys[j] - xs[i])) * yl[j] * xr[i]
    return out


cdef inline void _pair(const double[::1] aug, double eps, double x, Py_ssize_t n,
                       Py_ssize_t* idx, double* left, double* right) noexcept nogil:
    cdef Py_ssize_t i = _locate(aug, x)
    cdef double a = aug[i], b = aug[i + 1], h = b - a
    if eps == 0.0:
        left[0] = (b - x) / h
        right[0] = (x - a) / h
    else:
        left[0] = _sinh_ratio(eps * (b - x), eps * h)
        right[0] = _sinh_ratio(eps * (x - a), eps * h)
    if i == 0:
        left[0] = 0.0
    if i == n:
        right[0] = 0.0
    idx[0] = i


def cardinal_pairs(const double[::1] aug, double eps, const double[::1] xs):
    cdef Py_ssize_t m = xs.shape[0], n = aug.shape[0] - 2, k
    idx = np.empty(m, dtype=np.intp)
    left = np.empty(m, dtype=np.float64)
    right = np.empty(m, dtype=np.float64)
    cdef cnp.intp_t[::1] oi = idx
    cdef double[::1] ol = left
    cdef double[::1] orr = right
    cdef Py_ssize_t i
    cdef double l, r
    with nogil:
        for k in range(m):
            _pair(aug, eps, xs[k], n, &i, &l, &r)
            oi[k] = i
            ol[k] = l
            orr[k] = r
    return idx, left, right


def lebesgue(const double[::1] aug, double eps, const double[::1] xs):
    cdef Py_ssize_t m = xs.shape[0], n = aug.shape[0] - 2, k, i
    cdef double x, a, b, h
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for k in range(m):
            x = xs[k]
            i = _locate(aug, x)
            a = aug[i]
            b = aug[i + 1]
            h = b - a
            if eps == 0.0:
                if i == 0:
                    o[k] = (x - a) / h
                elif i == n:
                    o[k] = (b - x) / h
                else:
                    o[k] = 1.0
            elif i == 0:
                o[k] = _sinh_ratio(eps * (x - a), eps * h)
            elif i == n:
                o[k] = _sinh_ratio(eps * (b - x), eps * h)
            else:
                o[k] = _cosh_ratio(0.5 * eps * ((x - a) - (b - x)), 0.5 * eps * h)
    return out


def power(const double[::1] aug, double eps, const double[::1] xs):
    cdef Py_ssize_t m = xs.shape[0], k, i
    cdef double x, a, b, p2
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for k in range(m):
            x = xs[k]
            i = _locate(aug, x)
            a = aug[i]
            b = aug[i + 1]
            if eps == 0.0:
                p2 = (x - a) * (b - x) / (b - a)
            else:
                p2 = _sinh_product_ratio(eps * (x - a), eps * (b - x), eps * (b - a), 0.0) / eps
            o[k] = sqrt(p2) if p2 > 0.0 else 0.0
    return out


def interpolate(const double[::1] aug, const double[::1] values, double eps,
                const double[::1] xs):
    cdef Py_ssize_t m = xs.shape[0], n = aug.shape[0] - 2, k, i
    cdef double l, r, acc
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for k in range(m):
            _pair(aug, eps, xs[k], n, &i, &l, &r)
            acc = 0.0
            if i >= 1:
                acc = acc + l * values[i - 1]
            if i + 1 <= n:
                acc = acc + r * values[i]
            o[k] = acc
    return out
