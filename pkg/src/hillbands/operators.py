"""Periodic Jacobi (1-D tight-binding) operators.

The operator acts on sequences by

    (H u)_n = hopping[n] u_{n+1} + onsite[n] u_n + hopping[n-1] u_{n-1}

with both coefficient arrays repeating with the same period N, so
hopping[n] is the bond between sites n and n+1 and hopping[N-1] wraps
the cell. Hoppings must be positive: flipping the sign of a bond is a
gauge transformation that never changes the spectrum.
"""

from dataclasses import dataclass, field

import numpy as np


@dataclass
class PeriodicJacobi:
    """One period of a tight-binding chain.

    Parameters
    ----------
    hopping : array_like
        Positive bond strengths a_0 .. a_{N-1}; a_{N-1} closes the cell.
    onsite : array_like
        Site energies b_0 .. b_{N-1}.
    """

    hopping: np.ndarray
    onsite: np.ndarray
    period: int = field(init=False)

    def __post_init__(self):
        a = np.atleast_1d(np.asarray(self.hopping, dtype=float)).copy()
        b = np.atleast_1d(np.asarray(self.onsite, dtype=float)).copy()
        if a.ndim != 1 or b.ndim != 1:
            raise ValueError("hopping and onsite must be one-dimensional")
        if a.size != b.size:
            raise ValueError(
                f"period mismatch: {a.size} hoppings vs {b.size} onsite energies"
            )
        if a.size == 0:
            raise ValueError("period must be at least one")
        if not np.all(np.isfinite(a)) or not np.all(np.isfinite(b)):
            raise ValueError("coefficients must be finite")
        if np.any(a <= 0):
            raise ValueError("hoppings must be positive")
        a.setflags(write=False)
        b.setflags(write=False)
        self.hopping = a
        self.onsite = b
        self.period = a.size

    @classmethod
    def free(cls, period, hopping=1.0, onsite=0.0):
        """Constant-coefficient chain: all bonds equal, all sites equal."""
        return cls(np.full(period, hopping), np.full(period, onsite))

    def hopping_product(self):
        return float(np.prod(self.hopping))

    def floquet_matrix(self, theta):
        """N x N Bloch Hamiltonian for boundary phase u_{n+N} = e^{i theta} u_n.

        Hermitian for real theta; its eigenvalues are the N solutions of
        discriminant(lam) = 2 cos(theta).
        """
        n = self.period
        J = np.zeros((n, n), dtype=complex)
        np.fill_diagonal(J, self.onsite)
        if n == 1:
            J[0, 0] += 2.0 * self.hopping[0] * np.cos(theta)
            return J
        idx = np.arange(n - 1)
        J[idx, idx + 1] += self.hopping[:-1]
        J[idx + 1, idx] += self.hopping[:-1]
        J[n - 1, 0] += self.hopping[-1] * np.exp(1j * theta)
        J[0, n - 1] += self.hopping[-1] * np.exp(-1j * theta)
        return J

    def floquet_eigenvalues(self, theta):
        """Sorted eigenvalues of the Bloch Hamiltonian at phase theta."""
        return np.linalg.eigvalsh(self.floquet_matrix(theta))

    def dirichlet_matrix(self):
        """Tridiagonal block on sites 1..N-1 (site 0 deleted).

        Its eigenvalues are the interior Dirichlet spectrum: by Cauchy
        interlacing against every floquet_matrix(theta), eigenvalue j
        is trapped in the closure of spectral gap j.
        """
        n = self.period
        if n == 1:
            return np.zeros((0, 0))
        d = np.diag(self.onsite[1:]).astype(float)
        if n > 2:
            idx = np.arange(n - 2)
            d[idx, idx + 1] = self.hopping[1:-1]
            d[idx + 1, idx] = self.hopping[1:-1]
        return d

    def dirichlet_eigenvalues(self):
        d = self.dirichlet_matrix()
        if d.size == 0:
            return np.zeros(0)
        return np.linalg.eigvalsh(d)

    def truncated_matrix(self, cells):
        """Dense Hamiltonian of `cells` repetitions with open ends."""
        n = self.period * cells
        diag = np.tile(self.onsite, cells)
        off = np.tile(self.hopping, cells)[: n - 1]
        return np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)

    def shifted(self, k):
        """Start the unit cell k sites later; the spectrum is unchanged."""
        k = k % self.period
        return PeriodicJacobi(np.roll(self.hopping, -k), np.roll(self.onsite, -k))

    def reflected(self):
        """Spatial reflection about site 0; the spectrum is unchanged."""
        return PeriodicJacobi(self.hopping[::-1], np.roll(self.onsite[::-1], 1))

    def __eq__(self, other):
        if not isinstance(other, PeriodicJacobi):
            return NotImplemented
        return (
            self.period == other.period
            and np.array_equal(self.hopping, other.hopping)
            and np.array_equal(self.onsite, other.onsite)
        )
