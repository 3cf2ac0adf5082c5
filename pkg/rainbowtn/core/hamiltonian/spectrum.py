"""Low-lying spectrum and frustration-freeness checks."""

import logging
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from scipy.sparse.linalg import ArpackNoConvergence, eigsh

from .. import constants
from ..config import RuntimeLimits, resolve_limits
from ..exceptions import ConvergenceError, InvalidParameterError
from ..schemas import FrustrationReport, SpectrumSummary, TermResidual
from .base import SparseHamiltonian, _as_vector

# eigenvalues requested from each large sector
_SECTOR_EIGENVALUES = 6


def charge_sectors(h: SparseHamiltonian) -> List[np.ndarray]:
    """
    Index blocks of fixed per-color charge #u^k - #d^k.

    Every term conserves these charges, so H is block diagonal over them.
    Blocks are ordered by their charge vectors.
    """
    digits = h.basis.digits(h.length)
    charges = np.zeros((digits.shape[0], h.j), dtype=np.int64)
    for k in range(1, h.j + 1):
        ups = (digits == h.basis.up(k)).sum(axis=1)
        downs = (digits == h.basis.down(k)).sum(axis=1)
        charges[:, k - 1] = ups - downs
    keys, inverse = np.unique(charges, axis=0, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    return [np.flatnonzero(inverse == i) for i in range(len(keys))]


def _sector_eigenvalues(
    h: SparseHamiltonian, sector: np.ndarray, limits: RuntimeLimits
) -> Tuple[np.ndarray, str]:
    block = h.matrix[sector][:, sector]
    size = len(sector)
    if size <= limits.dense_eigensolver_dim:
        return np.linalg.eigvalsh(block.toarray()), "dense"
    k = min(_SECTOR_EIGENVALUES, size - 1)
    try:
        values = eigsh(block.tocsc(), k=k, which="SA", return_eigenvectors=False)
    except ArpackNoConvergence as e:
        raise ConvergenceError(
            f"Lanczos did not converge on a sector of size {size}: {str(e)}"
        )
    return np.sort(values), "lanczos"


def spectrum_summary(
    h: SparseHamiltonian,
    count: int = 6,
    limits: Optional[RuntimeLimits] = None,
) -> SpectrumSummary:
    """
    Lowest eigenvalues of H gathered over its charge sectors.

    Sectors up to ``dense_eigensolver_dim`` are diagonalized densely, larger
    ones with Lanczos on the smallest algebraic eigenvalues.
    """
    limits = resolve_limits(limits)
    collected = []
    solvers: Dict[str, int] = {"dense": 0, "lanczos": 0}
    for sector in charge_sectors(h):
        values, solver = _sector_eigenvalues(h, sector, limits)
        solvers[solver] += 1
        if solver == "lanczos" and np.all(values < constants.KERNEL_THRESHOLD):
            logging.warning(
                f"all {len(values)} Lanczos eigenvalues of a sector of size "
                f"{len(sector)} are below the kernel threshold; kernel may be undercounted"
            )
        collected.append(values)
    spectrum = np.sort(np.concatenate(collected))
    kernel = int(np.sum(spectrum < constants.KERNEL_THRESHOLD))
    return SpectrumSummary(
        lambda_min=float(spectrum[0]),
        kernel_dimension=kernel,
        lowest=[float(v) for v in spectrum[: max(count, 2)]],
        solvers=solvers,
    )


def ground_energy_and_kernel(
    h: SparseHamiltonian, limits: Optional[RuntimeLimits] = None
) -> Tuple[float, int]:
    """Smallest eigenvalue and the number of eigenvalues below 1e-9."""
    summary = spectrum_summary(h, limits=limits)
    return summary.lambda_min, summary.kernel_dimension


def spectral_gap(h: SparseHamiltonian, limits: Optional[RuntimeLimits] = None) -> float:
    """Second-smallest eigenvalue of H."""
    summary = spectrum_summary(h, count=2, limits=limits)
    if len(summary.lowest) < 2:
        raise ConvergenceError("fewer than two eigenvalues available")
    return summary.lowest[1]


def term_expectation(h: SparseHamiltonian, term, psi: np.ndarray) -> float:
    """<psi| v><v |psi> for a rank-1 term, via a partial contraction of psi."""
    d = h.basis.dimension
    width = len(term.sites)
    first = term.sites[0]
    shaped = psi.reshape(d ** (first - 1), d**width, d ** (h.length - first - width + 1))
    overlap = np.tensordot(term.vector.conj(), shaped, axes=([0], [1]))
    return float(np.sum(np.abs(overlap) ** 2))


def verify_frustration_free(
    h: SparseHamiltonian,
    state: Any,
    tolerance: float = constants.FRUSTRATION_TOLERANCE,
) -> FrustrationReport:
    """
    Expectation of every individual projector in the normalized state.

    :param state: dense vector or GroundState
    """
    psi = np.asarray(_as_vector(h, state), dtype=float)
    norm = np.linalg.norm(psi)
    if norm == 0:
        raise InvalidParameterError("cannot check frustration on the zero vector")
    psi = psi / norm
    residuals = [
        TermResidual(
            label=term.label,
            family=term.family,
            sites=term.sites,
            value=term_expectation(h, term, psi),
        )
        for term in h.terms
    ]
    report = FrustrationReport(residuals=residuals, tolerance=tolerance)
    logging.debug(
        f"frustration check: max residual {report.max_residual:.3e} over {len(residuals)} terms"
    )
    return report
