from .base import (
    GroundState,
    amplitude,
    build_ground_state,
    fidelity,
    interior_area,
    walk_sort_key,
)
from .dense import schmidt_spectrum_dense, von_neumann_entropy
from .transfer import (
    CutSpectrum,
    TransferTables,
    chain_partition,
    cut_distribution,
    entanglement_entropy,
    entropy_profile,
    log_norm_sq,
    matched_pair_weight,
    max_area_tables,
    norm_sq,
    transfer_tables,
)

__all__ = [
    "GroundState",
    "CutSpectrum",
    "TransferTables",
    "build_ground_state",
    "amplitude",
    "fidelity",
    "interior_area",
    "walk_sort_key",
    "norm_sq",
    "log_norm_sq",
    "cut_distribution",
    "entanglement_entropy",
    "entropy_profile",
    "chain_partition",
    "matched_pair_weight",
    "max_area_tables",
    "transfer_tables",
    "schmidt_spectrum_dense",
    "von_neumann_entropy",
]
