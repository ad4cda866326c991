"""Operators sharing a band structure.

Equality of discriminants is equality of spectra, so the discriminant
coefficient vector is a complete isospectrality invariant. Cyclic
relabeling and reflection of the unit cell always preserve it; beyond
that discrete symmetry there is a continuous family, generically of
dimension one less than the period, explored here by walking the null
space of the coefficient map and projecting back with Gauss-Newton.

Exhaustive enumeration over a finite alphabet of onsite energies splits
the alphabet^N cube into isospectral classes; classes larger than a
single dihedral orbit are accidental degeneracies worth attention.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .discriminant import Discriminant
from .operators import PeriodicJacobi


def dihedral_orbit(op, decimals=12):
    """All distinct chains reachable by shifts and reflection."""
    seen = {}
    for base in (op, op.reflected()):
        for k in range(op.period):
            candidate = base.shifted(k)
            key = (
                tuple(np.round(candidate.hopping, decimals)),
                tuple(np.round(candidate.onsite, decimals)),
            )
            seen.setdefault(key, candidate)
    return list(seen.values())


def orbit_distance(op, other):
    """Smallest max-norm parameter distance from other to op's orbit."""
    if op.period != other.period:
        raise ValueError("periods differ")
    best = np.inf
    for member in dihedral_orbit(op):
        d = max(
            np.max(np.abs(member.hopping - other.hopping)),
            np.max(np.abs(member.onsite - other.onsite)),
        )
        best = min(best, d)
    return float(best)


@dataclass(frozen=True)
class IsospectralClass:
    """Onsite patterns over a fixed hopping that share a discriminant."""

    key: tuple
    members: tuple

    @property
    def size(self):
        return len(self.members)

    def orbit_count(self, hopping):
        """Number of dihedral orbits merged into this class.

        Only meaningful over uniform hopping, where shifting the onsite
        pattern alone is a symmetry.
        """
        hopping = np.atleast_1d(np.asarray(hopping, dtype=float))
        if hopping.size > 1 and not np.all(hopping == hopping[0]):
            raise ValueError("orbit counting requires uniform hopping")
        if hopping.size == 1:
            hopping = np.full(len(self.members[0]), hopping[0])
        remaining = set(self.members)
        count = 0
        while remaining:
            seed = PeriodicJacobi(hopping, np.array(next(iter(remaining))))
            orbit = {tuple(m.onsite) for m in dihedral_orbit(seed)}
            remaining -= orbit
            count += 1
        return count


def enumerate_onsite_classes(values, period, hopping=1.0, decimals=9):
    """Partition all onsite patterns from a finite alphabet by spectrum.

    Parameters
    ----------
    values : sequence of float
        The alphabet each site draws from.
    period : int
        Cell length N; the search space is len(values) ** N patterns.
    hopping : float or array_like
        Fixed bond strengths, uniform if scalar.
    decimals : int
        Rounding used to key discriminant coefficients.

    Returns
    -------
    list of IsospectralClass
        Sorted by descending size, then by key.
    """
    values = [float(v) for v in values]
    hopping = np.atleast_1d(np.asarray(hopping, dtype=float))
    if hopping.size == 1:
        hopping = np.full(period, hopping[0])
    groups = {}
    for pattern in itertools.product(values, repeat=period):
        op = PeriodicJacobi(hopping, np.array(pattern))
        key = Discriminant.from_operator(op).coefficient_key(decimals)
        groups.setdefault(key, []).append(pattern)
    classes = [
        IsospectralClass(key, tuple(members)) for key, members in groups.items()
    ]
    classes.sort(key=lambda c: (-c.size, c.key))
    return classes


def _pack(op):
    return np.concatenate([np.log(op.hopping), op.onsite])


def _unpack(x):
    n = x.size // 2
    return PeriodicJacobi(np.exp(x[:n]), x[n:])


def _fd_jacobian(fun, x, h=1e-6):
    f0 = fun(x)
    jac = np.zeros((f0.size, x.size))
    for j in range(x.size):
        step = h * max(1.0, abs(x[j]))
        xp = x.copy()
        xp[j] += step
        xm = x.copy()
        xm[j] -= step
        jac[:, j] = (fun(xp) - fun(xm)) / (2.0 * step)
    return jac


def _gauss_newton_project(fun, x, tol, max_iter=50):
    for _ in range(max_iter):
        fx = fun(x)
        if np.max(np.abs(fx)) <= tol:
            return x
        jac = _fd_jacobian(fun, x)
        step, *_ = np.linalg.lstsq(jac, -fx, rcond=None)
        x = x + step
    fx = fun(x)
    if np.max(np.abs(fx)) <= tol:
        return x
    raise RuntimeError("projection onto the isospectral set stalled")


def isospectral_neighbors(op, count=1, step=0.1, seed=None, tol=1e-10):
    """Walk the continuous isospectral family of a chain.

    Each step moves along a random direction in the null space of the
    discriminant-coefficient map and projects back with Gauss-Newton,
    so every returned chain shares the starting band structure while
    being genuinely different (not a shift or reflection, generically).

    Parameters
    ----------
    op : PeriodicJacobi
        Starting chain. Needs open gaps: at fully degenerate points
        such as the constant chain, the family collapses to a point
        and projection cannot succeed.
    count : int
        Number of steps, and of returned chains.
    step : float
        Tangent step length in (log hopping, onsite) coordinates.
    seed : int or numpy Generator, optional
        Randomness for the tangent directions.
    tol : float
        Max-norm residual on discriminant coefficients after projection.

    Returns
    -------
    list of PeriodicJacobi
    """
    rng = np.random.default_rng(seed)
    target = Discriminant.from_operator(op).coefficients

    def fun(x):
        return Discriminant.from_operator(_unpack(x)).coefficients - target

    x = _pack(op)
    out = []
    for _ in range(count):
        jac = _fd_jacobian(fun, x)
        _, s, vt = np.linalg.svd(jac)
        cutoff = s[0] * 1e-8 if s.size else 0.0
        rank = int(np.sum(s > cutoff))
        null = vt[rank:]
        if null.shape[0] == 0:
            raise RuntimeError("no isospectral freedom at this chain")
        direction = null.T @ rng.standard_normal(null.shape[0])
        direction /= np.linalg.norm(direction)
        x = _gauss_newton_project(fun, x + step * direction, tol)
        out.append(_unpack(x))
    return out
