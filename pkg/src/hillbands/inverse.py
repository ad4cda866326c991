"""Inverse spectral problems: recovering a chain from its discriminant.

With the hoppings held fixed, the map from onsite energies to the
coefficients of the monic discriminant (prod a) * Delta is a smooth
N-to-N system solved here by damped Newton iteration with an analytic
Jacobian. Band-edge data determines the discriminant directly: the
monic polynomials built from the periodic and antiperiodic eigenvalues
differ by the constant 4 * prod(a), which recovers the hopping product,
and their average is the monic discriminant.
"""

import numpy as np
from scipy.optimize import least_squares

from . import polynomials as poly
from . import rootfinding
from . import transfer
from .discriminant import Discriminant
from .operators import PeriodicJacobi


def newton_solve(fun, jac, x0, tol=1e-12, max_iter=60, callback=None):
    """Solve fun(x) = 0 by Newton iteration with backtracking.

    Parameters
    ----------
    fun : callable(x) -> ndarray
        Residual vector.
    jac : callable(x) -> ndarray
        Jacobian matrix of fun at x.
    x0 : array_like
        Starting point.
    tol : float
        Convergence threshold on the max-norm of the residual.
    max_iter : int
        Iteration budget before giving up.
    callback : callable(k, x, residual_norm), optional
        Invoked once per iteration.

    Returns
    -------
    np.ndarray
        The root.

    Raises
    ------
    RuntimeError
        If the residual does not drop below tol within max_iter steps.
    """
    x = np.array(x0, dtype=float)
    fx = np.asarray(fun(x), dtype=float)
    norm = np.max(np.abs(fx))
    for k in range(max_iter):
        if callback is not None:
            callback(k, x, norm)
        if norm < tol:
            return x
        try:
            step = np.linalg.solve(jac(x), -fx)
        except np.linalg.LinAlgError as exc:
            raise RuntimeError(f"singular Jacobian at iteration {k}") from exc
        t = 1.0
        while t > 2.0**-30:
            x_new = x + t * step
            f_new = np.asarray(fun(x_new), dtype=float)
            norm_new = np.max(np.abs(f_new))
            if norm_new < norm or norm_new < tol:
                break
            t *= 0.5
        else:
            raise RuntimeError("Newton line search stalled")
        x, fx, norm = x_new, f_new, norm_new
    if norm < tol:
        return x
    raise RuntimeError(
        f"Newton did not converge in {max_iter} iterations (residual {norm:.3e})"
    )


def onsite_jacobian(op):
    """d(monic discriminant coefficients) / d(onsite), an N x N matrix.

    Row i, column j holds the lam^i coefficient of the derivative of
    (prod a) * Delta with respect to onsite[j], computed exactly from
    the cyclically split monodromy product: differentiating step j
    leaves tr(L_j D_j' R_j) with D_j' = [[-1/a_j, 0], [0, 0]], so the
    derivative polynomial is -(prod a / a_j) * (L_j R_j)[0, 0].
    """
    n = op.period
    steps = [transfer.step_matrix_poly(op, j) for j in range(n)]
    ident = [[np.array([1.0]), np.array([0.0])], [np.array([0.0]), np.array([1.0])]]

    prefix = [ident]  # prefix[j] = A_{j-1} ... A_0
    for j in range(n):
        prefix.append(transfer._poly_mat_mul(steps[j], prefix[-1]))
    suffix = [ident]  # suffix[j] = A_{N-1} ... A_{N-j}
    for j in range(n):
        suffix.append(transfer._poly_mat_mul(suffix[-1], steps[n - 1 - j]))

    pa = op.hopping_product()
    jac = np.zeros((n, n))
    for j in range(n):
        left = prefix[j]
        right = suffix[n - 1 - j]
        entry = poly.add(
            poly.multiply(left[0][0], right[0][0]),
            poly.multiply(left[0][1], right[1][0]),
        )
        col = -(pa / op.hopping[j]) * entry
        jac[: col.size, j] = col[:n]
    return jac


def _monic_numeric(op):
    """Monic discriminant coefficients via one characteristic polynomial.

    At Bloch phase pi/2 the cosine term drops out of
    det(lam I - J(theta)) = prod(a) (Delta - 2 cos theta), so the
    ascending charpoly coefficients of J(pi/2) are exactly
    prod(a) * Delta. Much cheaper than the symbolic monodromy product,
    at the cost of eigensolver-level (~1e-13) coefficient noise.
    """
    return np.poly(op.floquet_matrix(np.pi / 2.0))[::-1].real


def recover_onsite(target, hopping, initial=None, tol=1e-11, max_iter=80, starts=64):
    """Find onsite energies reproducing a target discriminant.

    Parameters
    ----------
    target : Discriminant or array_like
        The goal, either a Discriminant or its ascending coefficients
        (length N + 1). The leading coefficient must equal
        1 / prod(hopping) up to roundoff: the hopping gauge is an input
        here, not an unknown.
    hopping : array_like
        Positive bond strengths, held fixed.
    initial : array_like, optional
        Starting onsite energies for a plain damped-Newton solve. When
        omitted, a seeded multistart search runs instead: the target's
        roots (which the onsite energies approach in the small-hopping
        limit, one per band) are assigned to sites in random orders and
        each start is driven by Levenberg-Marquardt with the analytic
        Jacobian. Plain Newton's basins around the finitely many
        solutions are far too small for a blind start; the damped
        multistart makes blind recovery reliable and, being seeded, is
        deterministic for a given target.
    tol : float
        Max-norm tolerance on the monic coefficient residual, measured
        relative to each target coefficient's magnitude (floored at 1,
        so it is absolute for order-one coefficients).
    max_iter : int
        Newton iteration budget (per start when multistarting).
    starts : int
        Multistart budget when no initial point is given.

    Returns
    -------
    PeriodicJacobi
        A chain with the requested discriminant. The inverse problem
        has finitely many solutions; which one is found depends on the
        starting point, but all share the target band structure.

    Raises
    ------
    RuntimeError
        If no start converges; non-real-rooted or otherwise
        unattainable coefficient vectors fail this way.
    """
    a = np.atleast_1d(np.asarray(hopping, dtype=float))
    n = a.size
    if isinstance(target, Discriminant):
        coeffs = target.coefficients
    else:
        coeffs = poly.as_poly(target)
    if coeffs.size != n + 1:
        raise ValueError(
            f"target degree {coeffs.size - 1} does not match period {n}"
        )
    pa = float(np.prod(a))
    if abs(coeffs[-1] * pa - 1.0) > 1e-6:
        raise ValueError(
            "leading coefficient is inconsistent with the hopping product"
        )
    monic_target = pa * coeffs
    scale = np.maximum(1.0, np.abs(monic_target[:n]))

    def fun(b):
        return (_monic_numeric(PeriodicJacobi(a, b))[:n] - monic_target[:n]) / scale

    def jac(b):
        return onsite_jacobian(PeriodicJacobi(a, b)) / scale[:, None]

    if initial is not None:
        b = newton_solve(fun, jac, initial, tol=tol, max_iter=max_iter)
        return PeriodicJacobi(a, b)

    guess = rootfinding.real_roots(monic_target)
    if guess.size != n:
        # Not real-rooted, so certainly not a genuine discriminant;
        # still give Newton one attempt from the staggered trace split.
        center = -monic_target[n - 1] / n
        guess = center + 1e-3 * (np.arange(n) - 0.5 * (n - 1))
        b = newton_solve(fun, jac, guess, tol=tol, max_iter=max_iter)
        return PeriodicJacobi(a, b)

    spread = max(guess[-1] - guess[0], 1.0)
    rng = np.random.default_rng(0)
    for attempt in range(max(1, starts)):
        start = guess.copy() if attempt == 0 else rng.permutation(guess)
        if attempt > 0:
            start = start + rng.normal(scale=0.02 * spread, size=n)
        res = least_squares(
            fun,
            start,
            jac=jac,
            method="lm",
            xtol=1e-14,
            ftol=1e-14,
            gtol=1e-15,
            max_nfev=60 * n,
        )
        if np.max(np.abs(fun(res.x))) < 1e3 * tol:
            try:
                b = newton_solve(fun, jac, res.x, tol=tol, max_iter=max_iter)
            except RuntimeError:
                continue
            return PeriodicJacobi(a, b)
    raise RuntimeError(
        f"no start out of {starts} converged; raise `starts` or supply an "
        "initial point, or the coefficients may not be attainable with the "
        "prescribed hoppings"
    )


def discriminant_from_edges(periodic, antiperiodic, rtol=1e-8):
    """Rebuild the discriminant from band-edge eigenvalue data.

    Parameters
    ----------
    periodic : array_like
        The N eigenvalues at Bloch phase 0, i.e. the zeros of Delta - 2.
    antiperiodic : array_like
        The N eigenvalues at Bloch phase pi, the zeros of Delta + 2.
    rtol : float
        Consistency tolerance: the two monic polynomials must differ by
        a constant at this relative level.

    Returns
    -------
    Discriminant
        Carries both the coefficients and the recovered hopping product.
    """
    per = np.sort(np.asarray(periodic, dtype=float))
    anti = np.sort(np.asarray(antiperiodic, dtype=float))
    if per.size != anti.size or per.size == 0:
        raise ValueError("need equally many periodic and antiperiodic eigenvalues")
    p0 = poly.from_roots(per)
    ppi = poly.from_roots(anti)
    diff = p0 - ppi
    scale = np.max(np.abs(p0))
    if np.max(np.abs(diff[1:])) > rtol * scale:
        raise ValueError("edge data is inconsistent: difference is not constant")
    pa = -diff[0] / 4.0
    if pa <= 0:
        raise ValueError(
            "edge data is inconsistent: nonpositive hopping product"
        )
    coeffs = (p0 + ppi) / (2.0 * pa)
    return Discriminant(coeffs, pa)


def recover_operator_from_edges(periodic, antiperiodic, hopping=None, **kwargs):
    """Full edge-data inversion: discriminant, then onsite recovery.

    When hopping is omitted the bonds are taken uniform at the
    geometric mean fixed by the recovered hopping product.
    """
    disc = discriminant_from_edges(periodic, antiperiodic)
    n = disc.degree
    if hopping is None:
        hopping = np.full(n, disc.hopping_product ** (1.0 / n))
    else:
        hopping = np.atleast_1d(np.asarray(hopping, dtype=float))
        if abs(np.prod(hopping) - disc.hopping_product) > 1e-6 * max(
            1.0, disc.hopping_product
        ):
            raise ValueError(
                "supplied hoppings contradict the recovered hopping product"
            )
    return recover_onsite(disc, hopping, **kwargs)
