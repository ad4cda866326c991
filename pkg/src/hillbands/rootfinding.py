"""Real-root isolation and refinement for real-rooted polynomials.

Two tools live here. Sturm chains give exact root counts on intervals
for square-free polynomials. The main solver, real_roots, targets the
polynomials this package produces: every derivative is again real-rooted
(true whenever the polynomial itself is real-rooted), so the roots of p'
split the line into intervals holding at most one root of p each, and
plain bisection finishes the job. Even-order roots never cross zero;
they are picked up where p vanishes at a critical point.

Float Sturm chains degrade with degree; each remainder is rescaled to
unit magnitude (sign counts are invariant under positive scaling) which
keeps them dependable through the moderate degrees used here.
"""

import numpy as np

from . import polynomials as poly


def sturm_chain(coeffs):
    """Sturm sequence of a square-free polynomial, largest degree first."""
    p0 = poly.trim(coeffs)
    if p0.size == 1:
        return [p0]
    chain = [p0, poly.derivative(p0)]
    while poly.degree(chain[-1]) > 0:
        _, rem = poly.divide(chain[-2], chain[-1])
        rem = poly.trim(rem, rtol=1e-14)
        if poly.is_zero(rem):
            break
        rem = -rem / np.max(np.abs(rem))
        chain.append(rem)
    return chain


def sign_variations(chain, x):
    """Sign changes along the chain evaluated at x."""
    signs = [np.sign(poly.evaluate(c, x)) for c in chain]
    signs = [s for s in signs if s != 0]
    return int(np.sum(np.abs(np.diff(signs)) > 0))


def count_roots(coeffs, lo, hi, chain=None):
    """Number of distinct real roots in (lo, hi], square-free input."""
    if hi < lo:
        raise ValueError("interval is reversed")
    if chain is None:
        chain = sturm_chain(coeffs)
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def refine_root(coeffs, lo, hi, tol=1e-13, max_iter=200):
    """Shrink a sign-change bracket [lo, hi] down to a root.

    Bisection until the bracket is below tol (relative to the midpoint
    scale), then one guarded Newton polish that must stay bracketed.
    """
    c = poly.trim(coeffs)
    flo = poly.evaluate(c, lo)
    fhi = poly.evaluate(c, hi)
    if flo == 0.0:
        return float(lo)
    if fhi == 0.0:
        return float(hi)
    if np.sign(flo) == np.sign(fhi):
        raise ValueError("no sign change on the bracket")
    a, b, fa = lo, hi, flo
    for _ in range(max_iter):
        m = 0.5 * (a + b)
        if (b - a) <= tol * max(1.0, abs(m)):
            break
        fm = poly.evaluate(c, m)
        if fm == 0.0:
            return float(m)
        if np.sign(fa) != np.sign(fm):
            b = m
        else:
            a, fa = m, fm
    root = 0.5 * (a + b)
    dc = poly.derivative(c)
    slope = poly.evaluate(dc, root)
    if slope != 0.0:
        polished = root - poly.evaluate(c, root) / slope
        if a <= polished <= b:
            root = polished
    return float(root)


def real_roots(coeffs, tol=1e-13, touch_rtol=1e-11):
    """All real roots of a real-rooted polynomial, sorted, with multiplicity.

    Parameters
    ----------
    coeffs : array_like
        Ascending coefficients. The polynomial (and hence its
        derivatives) must have only real roots; this holds for every
        characteristic-type polynomial produced by this package.
    tol : float
        Relative bracket width for bisection.
    touch_rtol : float
        A critical point c counts as a double root when |p(c)| is below
        touch_rtol times the evaluation scale of p at c.

    Returns
    -------
    np.ndarray
        Sorted roots; even-order roots appear twice.
    """
    c = poly.trim(coeffs)
    n = c.size - 1
    if n <= 0:
        return np.zeros(0)
    if n == 1:
        return np.array([-c[0] / c[1]])
    if n == 2:
        return _quadratic_roots(c, touch_rtol)

    crit = real_roots(poly.derivative(c), tol, touch_rtol)
    crit = _dedupe(crit, tol)
    bound = poly.cauchy_bound(c)
    pts = np.concatenate([[-bound], crit, [bound]])
    vals = poly.evaluate(c, pts)

    # A value at a critical point within touch_rtol of zero is an
    # even-order root sitting exactly at that critical point. The
    # polynomial is monotone between critical points, so the adjacent
    # intervals then hold no further roots; apparent sign changes there
    # are evaluation noise and must not be bisected.
    graze = np.zeros(pts.size, dtype=bool)
    roots = []
    for i, cp in enumerate(crit, start=1):
        if abs(vals[i]) <= touch_rtol * poly.eval_scale(c, cp):
            graze[i] = True
            roots.extend([float(cp), float(cp)])

    for k in range(pts.size - 1):
        if graze[k] or graze[k + 1]:
            continue
        if vals[k] * vals[k + 1] < 0.0:
            roots.append(refine_root(c, pts[k], pts[k + 1], tol))

    return np.sort(roots)


def _quadratic_roots(c, touch_rtol):
    c0, c1, c2 = c[0], c[1], c[2]
    disc = c1 * c1 - 4.0 * c2 * c0
    scale = max(c1 * c1, abs(4.0 * c2 * c0), 1e-300)
    if disc < 0.0:
        if disc >= -touch_rtol * scale:
            disc = 0.0
        else:
            return np.zeros(0)
    sq = np.sqrt(disc)
    # Citardauq pairing avoids cancellation in the small root
    q = -0.5 * (c1 + np.copysign(sq, c1 if c1 != 0.0 else 1.0))
    if q != 0.0:
        return np.sort([q / c2, c0 / q])
    return np.sort([-sq / (2.0 * c2), sq / (2.0 * c2)])


def _dedupe(xs, tol):
    if xs.size == 0:
        return xs
    out = [xs[0]]
    for x in xs[1:]:
        if abs(x - out[-1]) > tol * max(1.0, abs(x)):
            out.append(x)
    return np.asarray(out)
