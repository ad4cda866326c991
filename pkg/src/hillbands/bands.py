"""Band structure of a periodic chain from its Hill discriminant.

A period-N chain has N closed spectral bands separated by N-1 gaps, some
of which may be closed. The 2N band edges are the zeros of Delta -+ 2,
equivalently the eigenvalues of the Bloch Hamiltonians at phase 0 and
pi. Both routes are implemented: the Hermitian eigensolver route and
polynomial root isolation on the discriminant; they must agree, and the
acceptance suite holds them to that.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import rootfinding
from .discriminant import Discriminant


@dataclass(frozen=True)
class Band:
    """Closed interval [lower, upper] of spectrum, indexed from the bottom."""

    index: int
    lower: float
    upper: float

    @property
    def width(self):
        return self.upper - self.lower

    def contains(self, lam, tol=0.0):
        return self.lower - tol <= lam <= self.upper + tol


@dataclass(frozen=True)
class Gap:
    """Open interval between bands index and index+1; may be empty."""

    index: int
    lower: float
    upper: float

    @property
    def width(self):
        return max(0.0, self.upper - self.lower)

    def is_open(self, tol=0.0):
        return self.width > tol


def band_edges_eig(op):
    """All 2N band edges via eigvalsh of the Bloch matrices at 0 and pi."""
    return np.sort(
        np.concatenate(
            [op.floquet_eigenvalues(0.0), op.floquet_eigenvalues(np.pi)]
        )
    )


def band_edges_bisection(op, tol=1e-13, touch_rtol=1e-11):
    """All 2N band edges via root isolation on (prod a)(Delta -+ 2).

    Closed gaps produce double zeros; the isolation routine reports
    them with multiplicity, so the count always comes out to 2N.
    """
    disc = Discriminant.from_operator(op)
    upper = rootfinding.real_roots(disc.shifted_monic(2.0), tol, touch_rtol)
    lower = rootfinding.real_roots(disc.shifted_monic(-2.0), tol, touch_rtol)
    edges = np.sort(np.concatenate([upper, lower]))
    if edges.size != 2 * op.period:
        raise RuntimeError(
            f"expected {2 * op.period} band edges, isolated {edges.size}"
        )
    return edges


class BandStructure:
    """Spectral data of a periodic chain.

    Parameters
    ----------
    operator : PeriodicJacobi
        The chain whose spectrum is described.
    method : {'eig', 'bisection'}
        How band edges are computed. 'eig' diagonalizes the Bloch
        matrices at phases 0 and pi; 'bisection' isolates the real
        zeros of the shifted discriminant.

    Notes
    -----
    With edges E_0 <= E_1 <= ... <= E_{2N-1}, band j is
    [E_{2j}, E_{2j+1}] and gap j is (E_{2j+1}, E_{2j+2}). The
    integrated density of states increases by exactly 1/N over each
    band and is flat across gaps.
    """

    def __init__(self, operator, method="eig"):
        self.operator = operator
        self.discriminant = Discriminant.from_operator(operator)
        if method == "eig":
            self.edges = band_edges_eig(operator)
        elif method == "bisection":
            self.edges = band_edges_bisection(operator)
        else:
            raise ValueError(f"unknown method {method!r}")
        self.edges.setflags(write=False)

    @cached_property
    def bands(self):
        return [
            Band(j, float(self.edges[2 * j]), float(self.edges[2 * j + 1]))
            for j in range(self.operator.period)
        ]

    @cached_property
    def gaps(self):
        return [
            Gap(j, float(self.edges[2 * j + 1]), float(self.edges[2 * j + 2]))
            for j in range(self.operator.period - 1)
        ]

    def open_gaps(self, tol=1e-9):
        return [g for g in self.gaps if g.is_open(tol)]

    def contains(self, lam, tol=0.0):
        """Spectrum membership, |Delta(lam)| <= 2, elementwise."""
        return np.abs(self.discriminant(lam)) <= 2.0 + tol

    def bloch_phase(self, lam):
        """Reduced Bloch phase arccos(Delta/2) in [0, pi], elementwise.

        Meaningful on the spectrum; clipped outside so edges evaluate
        cleanly to 0 or pi.
        """
        return np.arccos(np.clip(self.discriminant(lam) / 2.0, -1.0, 1.0))

    def dispersion(self, thetas):
        """Band energies over Bloch phases; shape (N, len(thetas))."""
        thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
        out = np.empty((self.operator.period, thetas.size))
        for k, theta in enumerate(thetas):
            out[:, k] = self.operator.floquet_eigenvalues(theta)
        return out

    def density_of_states(self, lam):
        """Per-site DOS |Delta'| / (N pi sqrt(4 - Delta^2)), elementwise.

        Zero off the spectrum; integrates to exactly 1/N over each band.
        Diverges like an inverse square root at open-gap edges.
        """
        lam = np.asarray(lam, dtype=float)
        d = self.discriminant(lam)
        under = 4.0 - d * d
        dprime = self.discriminant.derivative(lam)
        n = self.operator.period
        with np.errstate(divide="ignore", invalid="ignore"):
            rho = np.where(
                under > 0.0,
                np.abs(dprime) / (n * np.pi * np.sqrt(np.where(under > 0, under, 1.0))),
                0.0,
            )
        if rho.ndim == 0:
            return float(rho)
        return rho

    def integrated_density(self, lam):
        """Fraction of states at or below lam, in [0, 1], elementwise."""
        lam = np.asarray(lam, dtype=float)
        scalar = lam.ndim == 0
        out = np.array(
            [self._ids_scalar(x) for x in np.atleast_1d(lam)], dtype=float
        )
        if scalar:
            return float(out[0])
        return out

    def quasimomentum(self, lam):
        """Unreduced per-site momentum in [0, pi]: pi * IDS(lam)."""
        ids = self.integrated_density(lam)
        return np.pi * ids

    def _ids_scalar(self, lam):
        n = self.operator.period
        filled = 0
        for band in self.bands:
            if lam >= band.upper:
                filled += 1
                continue
            if lam < band.lower:
                break
            phase = self.bloch_phase(lam)
            # Delta alternates between +2 and -2 along the edge sequence,
            # ending at +2 on the top edge, so the phase at band j's lower
            # edge is exactly 0 when N - j is even and pi otherwise. Using
            # the exact value avoids the sqrt-of-roundoff noise that
            # evaluating arccos at a computed edge would introduce.
            phase_lower = 0.0 if (n - band.index) % 2 == 0 else np.pi
            return (filled + abs(phase - phase_lower) / np.pi) / n
        return filled / n

    def to_dict(self):
        return {
            "period": self.operator.period,
            "hopping": self.operator.hopping.tolist(),
            "onsite": self.operator.onsite.tolist(),
            "edges": self.edges.tolist(),
            "bands": [[b.lower, b.upper] for b in self.bands],
            "band_widths": [b.width for b in self.bands],
            "gaps": [[g.lower, g.upper] for g in self.gaps],
            "gap_widths": [g.width for g in self.gaps],
            "discriminant_coefficients": self.discriminant.coefficients.tolist(),
        }
