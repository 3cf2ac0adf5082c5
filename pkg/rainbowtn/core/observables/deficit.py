"""
Area deficit of a matched pair.

At large t the correlation of sites x1 < x2 is carried by the largest-area
walk in which they are matched; the deficit is how much area that walk
loses against the rainbow (all Ups, then all Downs).
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple, Union

from .. import constants
from ..exceptions import InvalidParameterError
from ..schemas import ChainModel, DeficitEntry, DeficitLawReport
from ..states import interior_area, matched_pair_weight, max_area_tables
from ..utils import log_method_call, validate_params
from ..walks import enumerate_walks, matched_pairs

Deficit = Union[int, float]


def _check_pair(n: int, x1: int, x2: int) -> None:
    if not 1 <= x1 < x2 <= 2 * n:
        raise InvalidParameterError(f"need 1 <= x1 < x2 <= {2 * n}, got ({x1}, {x2})")


@lru_cache(maxsize=16)
def _matched_areas(n: int, model: ChainModel) -> Tuple[int, Dict[Tuple[int, int], int]]:
    """Largest area overall and, per matched pair, among walks matching it."""
    best: Dict[Tuple[int, int], int] = {}
    largest = 0
    for walk in enumerate_walks(n, 1, model):
        walk_area = interior_area(walk)
        largest = max(largest, walk_area)
        for x, y, _ in matched_pairs(walk):
            if walk_area > best.get((x, y), -1):
                best[(x, y)] = walk_area
    return largest, best


@validate_params(n=int, x1=int, x2=int)
def max_area_deficit(
    n: int,
    model: ChainModel = ChainModel.motzkin,
    x1: int = 1,
    x2: int = 2,
) -> Deficit:
    """
    A_max minus the largest area of a walk matching x1 with x2.

    Exhaustive over uncolored walks up to length 12, max-plus transfer above.
    Colors never change areas, so j plays no part.

    :return: a non-negative int, or ``math.inf`` for a pair no walk matches
    """
    model = ChainModel(model)
    _check_pair(n, x1, x2)
    if 2 * n <= constants.DEFICIT_BRUTE_FORCE_MAX_LENGTH:
        largest, best = _matched_areas(n, model)
        if (x1, x2) not in best:
            return math.inf
        return largest - best[(x1, x2)]
    tables = max_area_tables(n, model)
    matched = matched_pair_weight(tables, x1, x2)
    if matched == -math.inf:
        return math.inf
    return int(tables.partition() - matched)


@validate_params(n=int, x1=int, x2=int)
def deficit_envelope(n: int, x1: int, x2: int) -> int:
    """
    Motzkin deficit from the tallest height profile compatible with the pair.

    With the pair sitting at height a = min(x1-1, 2n-x2), every cut is bounded
    by its distance to the chain ends, to the pair's feet, and (inside the
    pair) by a+1 plus the distance to the pair's ends. Heights may change by
    at most one per step, so the pointwise minimum of these bounds is itself
    a walk.
    """
    _check_pair(n, x1, x2)
    length = 2 * n
    base = min(x1 - 1, length - x2)
    total = 0
    for p in range(1, length):
        bound = min(p, length - p)
        if x1 <= p <= x2 - 1:
            bound = min(bound, base + 1 + min(p - x1, x2 - 1 - p))
        elif p < x1:
            bound = min(bound, base + (x1 - 1 - p))
        else:
            bound = min(bound, base + (p - x2))
        total += bound
    return n * n - total


def centered_site(n: int, x: int) -> Fraction:
    """Half-integer coordinate x - (2n+1)/2, zero at the chain's middle."""
    return Fraction(2 * x - 2 * n - 1, 2)


def deficit_law(n: int, x1: int, x2: int) -> Fraction:
    """|x1~**2 - x2~**2| in middle-centered coordinates."""
    return abs(centered_site(n, x1) ** 2 - centered_site(n, x2) ** 2)


@log_method_call()
@validate_params(n=int)
def deficit_law_check(
    n: int, model: ChainModel = ChainModel.motzkin
) -> DeficitLawReport:
    """
    Compare the deficit of every matchable even-separation pair with the
    centered-square law and report where they agree.
    """
    model = ChainModel(model)
    entries = []
    for x1 in range(1, 2 * n + 1):
        for x2 in range(x1 + 2, 2 * n + 1, 2):
            deficit = max_area_deficit(n, model, x1, x2)
            if math.isinf(deficit):
                continue
            law = deficit_law(n, x1, x2)
            entries.append(
                DeficitEntry(
                    x1=x1,
                    x2=x2,
                    deficit=float(deficit),
                    law=float(law),
                    matches=deficit == law,
                )
            )
    report = DeficitLawReport(n=n, entries=entries)
    logging.info(
        f"Deficit law at 2n={2 * n} ({model.value}): {len(report.matches)} matches, "
        f"{len(report.exceptions)} exceptions"
    )
    return report
