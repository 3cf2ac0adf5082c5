from .base import (
    ProjectorTerm,
    SparseHamiltonian,
    apply,
    build_hamiltonian,
    embed,
    export_coordinates,
    projector_terms,
)
from .basis import LocalBasis
from .spectrum import (
    charge_sectors,
    ground_energy_and_kernel,
    spectral_gap,
    spectrum_summary,
    term_expectation,
    verify_frustration_free,
)

__all__ = [
    "LocalBasis",
    "ProjectorTerm",
    "SparseHamiltonian",
    "build_hamiltonian",
    "projector_terms",
    "embed",
    "apply",
    "export_coordinates",
    "charge_sectors",
    "spectrum_summary",
    "ground_energy_and_kernel",
    "spectral_gap",
    "term_expectation",
    "verify_frustration_free",
]
