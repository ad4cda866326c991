"""Band structure of 1-D periodic tight-binding chains via the Hill discriminant."""

from .bands import Band, BandStructure, Gap, band_edges_bisection, band_edges_eig
from .discriminant import Discriminant
from .inverse import (
    discriminant_from_edges,
    newton_solve,
    recover_onsite,
    recover_operator_from_edges,
)
from .isospectral import (
    IsospectralClass,
    dihedral_orbit,
    enumerate_onsite_classes,
    isospectral_neighbors,
    orbit_distance,
)
from .operators import PeriodicJacobi
from .tightbinding import band_structure, dos_curve, gap_report, make_chain

__version__ = "0.1.0"

__all__ = [
    "Band",
    "BandStructure",
    "Discriminant",
    "Gap",
    "IsospectralClass",
    "PeriodicJacobi",
    "band_edges_bisection",
    "band_edges_eig",
    "band_structure",
    "dihedral_orbit",
    "discriminant_from_edges",
    "dos_curve",
    "enumerate_onsite_classes",
    "gap_report",
    "isospectral_neighbors",
    "make_chain",
    "newton_solve",
    "orbit_distance",
    "recover_onsite",
    "recover_operator_from_edges",
    "__version__",
]
