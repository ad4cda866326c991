"""Transfer matrices for the three-term recurrence of a periodic chain.

The eigenvalue equation H u = lam u is marched site to site by

    (u_{n+1}, u_n) = A_n(lam) (u_n, u_{n-1}),
    A_n = [[(lam - b_n)/a_n, -a_{n-1}/a_n], [1, 0]],

and the monodromy M(lam) = A_{N-1} ... A_0 carries a solution across one
full period. det A_n = a_{n-1}/a_n telescopes, so det M = 1 identically.
Entries of M are polynomials in lam; this module computes them both
numerically at a point and symbolically as coefficient arrays.
"""

import numpy as np

from . import polynomials as poly


def step_matrix(op, n, lam):
    """A_n(lam) as a 2x2 array; n is taken mod the period."""
    n = n % op.period
    a_prev = op.hopping[n - 1]
    a_cur = op.hopping[n]
    return np.array(
        [[(lam - op.onsite[n]) / a_cur, -a_prev / a_cur], [1.0, 0.0]]
    )


def monodromy(op, lam):
    """Product A_{N-1} ... A_0 evaluated at lam."""
    m = np.eye(2)
    for n in range(op.period):
        m = step_matrix(op, n, lam) @ m
    return m


def _poly_mat_mul(x, y):
    out = [[None, None], [None, None]]
    for i in range(2):
        for j in range(2):
            acc = np.zeros(1)
            for k in range(2):
                acc = poly.add(acc, poly.multiply(x[i][k], y[k][j]))
            out[i][j] = acc
    return out


def step_matrix_poly(op, n):
    """A_n with entries as ascending coefficient arrays."""
    n = n % op.period
    a_prev = op.hopping[n - 1]
    a_cur = op.hopping[n]
    return [
        [np.array([-op.onsite[n] / a_cur, 1.0 / a_cur]), np.array([-a_prev / a_cur])],
        [np.array([1.0]), np.array([0.0])],
    ]


def monodromy_poly(op):
    """Monodromy with polynomial entries, [[M00, M01], [M10, M11]].

    Degrees are N, N-1, N-1, N-2 (period N). The trace is the Hill
    discriminant; the zeros of M01 are the interior Dirichlet spectrum.
    """
    m = [
        [np.array([1.0]), np.array([0.0])],
        [np.array([0.0]), np.array([1.0])],
    ]
    for n in range(op.period):
        m = _poly_mat_mul(step_matrix_poly(op, n), m)
    return m


def discriminant_coefficients(op):
    """Ascending coefficients of trace M(lam), degree = period."""
    m = monodromy_poly(op)
    return poly.add(m[0][0], m[1][1])


def dirichlet_coefficients(op):
    """Ascending coefficients of M01, degree = period - 1.

    Up to normalization this is the characteristic polynomial of
    the chain restricted to sites 1..N-1 with clamped ends.
    """
    return monodromy_poly(op)[0][1]
