"""
Area-deformed colored Motzkin Hamiltonian

    H = boundary + sum_s P_s + sum_s P_s^cross

where s = 1..2n-1 labels the bond between sites s and s+1 (the site index is
``s`` here because ``j`` already counts colors). P_s projects onto the
normalized states

    Phi^k   ~ |u^k 0> - t |0 u^k>
    Psi^k   ~ |0 d^k> - t |d^k 0>
    Theta^k ~ |u^k d^k> - t |0 0>

each scaled by 1/sqrt(1+t^2); P_s^cross sums |u^k d^k'><u^k d^k'| over
k != k', and the boundary term is sum_k |d^k><d^k|_1 + |u^k><u^k|_2n.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import scipy.sparse as sp

from .. import constants
from ..config import RuntimeLimits, resolve_limits
from ..exceptions import DimensionMismatchError, InvalidParameterError, ResourceCapError
from ..utils import atomic_write, log_method_call, validate_params
from ..walks import Step
from .basis import LocalBasis


@dataclass(frozen=True, eq=False)
class ProjectorTerm:
    """A rank-1 projector |v><v| on consecutive sites starting at ``sites[0]``."""

    label: str
    family: str
    sites: Tuple[int, ...]
    vector: np.ndarray

    def local_matrix(self) -> np.ndarray:
        return np.outer(self.vector, self.vector)


class SparseHamiltonian:
    """Sparse symmetric operator on (2j+1)**(2n) states plus its term list."""

    def __init__(
        self,
        n: int,
        j: int,
        t: float,
        matrix: sp.csr_matrix,
        terms: List[ProjectorTerm],
        basis: LocalBasis,
    ):
        self.n = n
        self.j = j
        self.t = t
        self.matrix = matrix
        self.terms = terms
        self.basis = basis

    @property
    def length(self) -> int:
        return 2 * self.n

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def term_counts(self) -> Dict[str, int]:
        counts = {"boundary": 0, "bulk": 0, "cross": 0}
        for term in self.terms:
            counts[term.family] += 1
        return counts

    def is_symmetric(self) -> bool:
        difference = (self.matrix - self.matrix.T).tocoo()
        return difference.nnz == 0 or float(np.max(np.abs(difference.data))) == 0.0

    def __repr__(self) -> str:
        return (
            f"SparseHamiltonian(n={self.n}, j={self.j}, t={self.t}, "
            f"dimension={self.dimension}, terms={len(self.terms)})"
        )


def _normalized(vector: np.ndarray) -> np.ndarray:
    return vector / np.linalg.norm(vector)


def embed(
    local: np.ndarray, first_site: int, width: int, d: int, length: int
) -> sp.csr_matrix:
    """Identity everywhere except sites first_site..first_site+width-1, where ``local`` acts."""
    left = sp.identity(d ** (first_site - 1), format="csr")
    right = sp.identity(d ** (length - first_site - width + 1), format="csr")
    return sp.kron(sp.kron(left, sp.csr_matrix(local)), right, format="csr")


def projector_terms(n: int, j: int, t: float, basis: LocalBasis) -> List[ProjectorTerm]:
    length = 2 * n
    flat = Step.flat()
    terms: List[ProjectorTerm] = []
    for k in range(1, j + 1):
        terms.append(
            ProjectorTerm(f"boundary d{k}@1", "boundary", (1,), basis.unit(Step.down(k)))
        )
        terms.append(
            ProjectorTerm(
                f"boundary u{k}@{length}", "boundary", (length,), basis.unit(Step.up(k))
            )
        )
    for s in range(1, length):
        sites = (s, s + 1)
        for k in range(1, j + 1):
            up, down = Step.up(k), Step.down(k)
            phi = basis.unit(up, flat) - t * basis.unit(flat, up)
            psi = basis.unit(flat, down) - t * basis.unit(down, flat)
            theta = basis.unit(up, down) - t * basis.unit(flat, flat)
            terms.append(ProjectorTerm(f"phi{k}@{s}", "bulk", sites, _normalized(phi)))
            terms.append(ProjectorTerm(f"psi{k}@{s}", "bulk", sites, _normalized(psi)))
            terms.append(ProjectorTerm(f"theta{k}@{s}", "bulk", sites, _normalized(theta)))
        for k in range(1, j + 1):
            for k2 in range(1, j + 1):
                if k != k2:
                    terms.append(
                        ProjectorTerm(
                            f"cross u{k}d{k2}@{s}",
                            "cross",
                            sites,
                            basis.unit(Step.up(k), Step.down(k2)),
                        )
                    )
    return terms


@log_method_call()
@validate_params(n=int, j=int)
def build_hamiltonian(
    n: int,
    j: int,
    t: Any,
    limits: Optional[RuntimeLimits] = None,
) -> SparseHamiltonian:
    """
    Assemble H as a CSR matrix, one Kronecker product per bond.

    :param t: deformation parameter, t >= 0 (t = 0 leaves product projectors)
    :raises ResourceCapError: if (2j+1)**(2n) exceeds ``limits.max_dimension``
    """
    limits = resolve_limits(limits)
    t = float(t)
    if n < 1 or j < 1:
        raise InvalidParameterError(f"need n >= 1 and j >= 1, got n={n}, j={j}")
    if t < 0:
        raise InvalidParameterError(f"t must be non-negative, got {t}")
    basis = LocalBasis(j)
    dimension = basis.dimension ** (2 * n)
    if dimension > limits.max_dimension:
        raise ResourceCapError(
            f"Hamiltonian dimension {dimension} exceeds max_dimension={limits.max_dimension}"
        )
    terms = projector_terms(n, j, t, basis)

    # sum the terms sharing a support before embedding
    grouped: Dict[Tuple[int, ...], np.ndarray] = {}
    for term in terms:
        local = term.local_matrix()
        grouped[term.sites] = grouped.get(term.sites, 0) + local
    matrix = sp.csr_matrix((dimension, dimension))
    for sites, local in grouped.items():
        matrix = matrix + embed(local, sites[0], len(sites), basis.dimension, 2 * n)
    matrix = matrix.tocsr()
    matrix.eliminate_zeros()
    h = SparseHamiltonian(n, j, t, matrix, terms, basis)
    logging.info(
        f"Built Hamiltonian n={n}, j={j}, t={t}: dimension {dimension}, "
        f"{len(terms)} terms, {h.matrix.nnz} nonzeros"
    )
    return h


def _as_vector(h: SparseHamiltonian, state: Any) -> np.ndarray:
    from ..states import GroundState

    if isinstance(state, GroundState):
        if state.j != h.j or state.params.length != h.length:
            raise DimensionMismatchError(
                f"state (n={state.n}, j={state.j}) does not match "
                f"Hamiltonian (n={h.n}, j={h.j})"
            )
        return state.to_vector(h.basis)
    vector = np.asarray(state)
    if vector.shape != (h.dimension,):
        raise DimensionMismatchError(
            f"vector of shape {vector.shape} does not match dimension {h.dimension}"
        )
    return vector


def apply(h: SparseHamiltonian, state: Any) -> np.ndarray:
    """H times a dense vector (or a GroundState, converted through ``to_vector``)."""
    return h.matrix @ _as_vector(h, state)


def export_coordinates(h: SparseHamiltonian, path: Optional[str] = None) -> str:
    """
    Nonzero entries as "row col value" lines, sorted by (row, col).

    :param path: when given, the text is also written there atomically
    """
    coo = h.matrix.tocoo()
    order = np.lexsort((coo.col, coo.row))
    lines = [
        f"{int(coo.row[i])} {int(coo.col[i])} {format(float(coo.data[i]), constants.FLOAT_FORMAT)}"
        for i in order
    ]
    text = "\n".join(lines) + "\n" if lines else ""
    if path is not None:
        atomic_write(path, text)
    return text
