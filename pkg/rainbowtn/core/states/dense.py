"""Brute-force Schmidt spectra, used as the oracle for the transfer entropy."""

import math
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..config import RuntimeLimits, resolve_limits
from ..exceptions import InvalidParameterError, ResourceCapError
from ..walks import WalkRules
from .base import GroundState


def schmidt_spectrum_dense(
    state: GroundState,
    z: int,
    limits: Optional[RuntimeLimits] = None,
) -> List[float]:
    """
    Eigenvalues of the reduced density matrix of sites 1..z, descending.

    The coefficient matrix is indexed by the distinct prefixes and suffixes
    of the support; its squared singular values are the Schmidt spectrum.

    :raises ResourceCapError: when the full Hilbert space exceeds ``max_dimension``
    """
    limits = resolve_limits(limits)
    length = state.params.length
    if not 1 <= z <= length - 1:
        raise InvalidParameterError(f"cut {z} is outside 1..{length - 1}")
    local = WalkRules(state.model).local_dimension(state.j)
    dimension = local**length
    if dimension > limits.max_dimension:
        raise ResourceCapError(
            f"dense Schmidt spectrum needs dimension {dimension} > max_dimension="
            f"{limits.max_dimension}"
        )

    unit = state.normalize()
    rows: Dict[tuple, int] = {}
    cols: Dict[tuple, int] = {}
    entries = []
    for walk in unit.walks():
        prefix, suffix = walk.steps[:z], walk.steps[z:]
        r = rows.setdefault(prefix, len(rows))
        c = cols.setdefault(suffix, len(cols))
        entries.append((r, c, unit.value(walk)))
    if not entries:
        return []
    matrix = np.zeros((len(rows), len(cols)))
    for r, c, value in entries:
        matrix[r, c] = value
    singular = np.linalg.svd(matrix, compute_uv=False)
    return sorted((float(s * s) for s in singular), reverse=True)


def von_neumann_entropy(eigenvalues: Sequence[float]) -> float:
    """-sum p ln p in nats, ignoring numerically zero values."""
    return -sum(p * math.log(p) for p in eigenvalues if p > 1e-300)
