"""Chebyshev polynomials of the first and second kind.

Coefficient arrays are ascending, matching the polynomials module.
Pointwise evaluation uses the trigonometric/hyperbolic closed forms,
which stay accurate far outside [-1, 1] where the power basis blows up.
"""

import numpy as np


def chebyshev_t_coefficients(n):
    """Ascending power-basis coefficients of T_n."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    prev = np.array([1.0])
    if n == 0:
        return prev
    cur = np.array([0.0, 1.0])
    for _ in range(n - 1):
        nxt = np.zeros(cur.size + 1)
        nxt[1:] = 2.0 * cur
        nxt[: prev.size] -= prev
        prev, cur = cur, nxt
    return cur


def chebyshev_u_coefficients(n):
    """Ascending power-basis coefficients of U_n."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    prev = np.array([1.0])
    if n == 0:
        return prev
    cur = np.array([0.0, 2.0])
    for _ in range(n - 1):
        nxt = np.zeros(cur.size + 1)
        nxt[1:] = 2.0 * cur
        nxt[: prev.size] -= prev
        prev, cur = cur, nxt
    return cur


def chebyshev_t(n, x):
    """T_n(x) for scalar or array x, stable for |x| > 1."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    inside = np.abs(x) <= 1.0
    out[inside] = np.cos(n * np.arccos(x[inside]))
    big = ~inside
    # T_n(cosh t) = cosh(n t); track the sign for x < -1 separately
    ax = np.abs(x[big])
    out[big] = np.sign(x[big]) ** n * np.cosh(n * np.arccosh(ax))
    if out.ndim == 0:
        return float(out)
    return out


def chebyshev_u(n, x):
    """U_n(x) for scalar or array x, stable for |x| > 1."""
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    out = np.empty_like(x)
    inside = np.abs(x) < 1.0
    t = np.arccos(x[inside])
    out[inside] = np.sin((n + 1) * t) / np.sin(t)
    at_one = x == 1.0
    out[at_one] = n + 1
    at_neg = x == -1.0
    out[at_neg] = (-1.0) ** n * (n + 1)
    big = np.abs(x) > 1.0
    ax = np.abs(x[big])
    t = np.arccosh(ax)
    out[big] = np.sign(x[big]) ** n * np.sinh((n + 1) * t) / np.sinh(t)
    if scalar:
        return float(out[0])
    return out
