"""Coefficient arithmetic for real polynomials in ascending order.

A polynomial is an ndarray of float coefficients, c[k] multiplying x**k.
The ring operations delegate to numpy.polynomial.polynomial; this module
adds the pieces numpy does not ship: trimming with a relative threshold,
monic normalization, affine composition, root bounds and scale estimates.
"""

import numpy as np
from numpy.polynomial import polynomial as P


def as_poly(coeffs):
    """Coerce to a float coefficient array, keeping at least degree 0."""
    c = np.atleast_1d(np.asarray(coeffs, dtype=float))
    if c.ndim != 1:
        raise ValueError("coefficient array must be one-dimensional")
    if c.size == 0:
        return np.zeros(1)
    return c


def trim(coeffs, rtol=0.0):
    """Strip trailing coefficients at or below rtol * max|c|."""
    c = as_poly(coeffs)
    cutoff = rtol * np.max(np.abs(c))
    n = c.size
    while n > 1 and abs(c[n - 1]) <= cutoff:
        n -= 1
    return c[:n]


def degree(coeffs):
    return trim(coeffs).size - 1


def is_zero(coeffs, rtol=0.0):
    c = trim(coeffs, rtol)
    return c.size == 1 and c[0] == 0.0


def add(p, q):
    return P.polyadd(as_poly(p), as_poly(q))


def subtract(p, q):
    return P.polysub(as_poly(p), as_poly(q))


def multiply(p, q):
    return P.polymul(as_poly(p), as_poly(q))


def scale(p, factor):
    return as_poly(p) * float(factor)


def derivative(p):
    c = as_poly(p)
    if c.size == 1:
        return np.zeros(1)
    return P.polyder(c)


def evaluate(p, x):
    """Horner evaluation; x may be a scalar or ndarray."""
    return P.polyval(x, as_poly(p))


def divide(p, q):
    """Euclidean division, (quotient, remainder)."""
    quo, rem = P.polydiv(as_poly(p), trim(q))
    return quo, rem


def monic(p):
    """Scale so the leading coefficient is one."""
    c = trim(p)
    if c.size == 1 and c[0] == 0.0:
        raise ValueError("cannot normalize the zero polynomial")
    return c / c[-1]


def from_roots(roots):
    """Monic polynomial with the given roots (ascending coefficients)."""
    r = np.atleast_1d(np.asarray(roots, dtype=float))
    if r.size == 0:
        return np.ones(1)
    return P.polyfromroots(r)


def affine_compose(p, alpha, beta):
    """Coefficients of p(alpha*x + beta) via Horner in the ring."""
    c = as_poly(p)
    inner = np.array([beta, alpha], dtype=float)
    out = np.array([c[-1]])
    for k in range(c.size - 2, -1, -1):
        out = P.polymul(out, inner)
        out[0] += c[k]
    return out


def cauchy_bound(p):
    """B with every real root of p inside [-B, B]."""
    c = trim(p)
    if c.size == 1:
        return 1.0
    return 1.0 + np.max(np.abs(c[:-1])) / abs(c[-1])


def eval_scale(p, x):
    """Sum of |c_k| |x|^k: the natural error scale of Horner at x."""
    c = as_poly(p)
    return P.polyval(abs(x), np.abs(c))
