"""Counting and exhaustive enumeration of colored walks."""

import logging
from typing import Dict, Iterator, List, Optional

from ..config import RuntimeLimits, resolve_limits
from ..exceptions import ResourceCapError
from ..schemas import ChainModel
from ..utils import log_method_call, validate_params
from .base import Step, StepKind, Walk, WalkRules


@validate_params(n=int, j=int)
def count_walks(n: int, j: int, model: ChainModel = ChainModel.motzkin) -> int:
    """
    Number of valid colored walks of length 2n, by dynamic programming over heights.

    Each Up picks one of j colors and its Down inherits it, so a shape with
    p pairs stands for j**p walks.
    """
    if n < 1 or j < 1:
        return 0
    rules = WalkRules(model)
    length = 2 * n
    counts = [1]
    for z in range(1, length + 1):
        top = min(z, length - z)
        new = [0] * (top + 1)
        for h, c in enumerate(counts):
            if not c:
                continue
            if h + 1 <= top:
                new[h + 1] += c * j
            if rules.allows_flat and h <= top:
                new[h] += c
            if h >= 1 and h - 1 <= top:
                new[h - 1] += c
        counts = new
    return counts[0]


@validate_params(n=int)
def shape_counts_by_pairs(n: int, model: ChainModel = ChainModel.motzkin) -> Dict[int, int]:
    """
    Uncolored walk shapes of length 2n grouped by number of Up/Down pairs.

    :return: {pairs: number of shapes}
    """
    rules = WalkRules(model)
    length = 2 * n
    # counts[h][p]: prefixes at height h with p up steps
    counts: List[Dict[int, int]] = [{0: 1}]
    for z in range(1, length + 1):
        top = min(z, length - z)
        new: List[Dict[int, int]] = [dict() for _ in range(top + 1)]
        for h, by_pairs in enumerate(counts):
            for pairs, c in by_pairs.items():
                if h + 1 <= top:
                    new[h + 1][pairs + 1] = new[h + 1].get(pairs + 1, 0) + c
                if rules.allows_flat and h <= top:
                    new[h][pairs] = new[h].get(pairs, 0) + c
                if h >= 1 and h - 1 <= top:
                    new[h - 1][pairs] = new[h - 1].get(pairs, 0) + c
        counts = new
    return dict(sorted(counts[0].items()))


@log_method_call()
def enumerate_walks(
    n: int,
    j: int,
    model: ChainModel = ChainModel.motzkin,
    limits: Optional[RuntimeLimits] = None,
) -> Iterator[Walk]:
    """
    Yield every valid walk exactly once, in lexicographic step order
    (Up colors ascending, then Flat, then Down).

    :raises ResourceCapError: if the walk count exceeds ``limits.max_walks``
    """
    limits = resolve_limits(limits)
    model = ChainModel(model)
    total = count_walks(n, j, model)
    if total > limits.max_walks:
        raise ResourceCapError(
            f"{total} walks for n={n}, j={j}, {model.value} exceed max_walks="
            f"{limits.max_walks}"
        )
    logging.debug(f"Enumerating {total} {model.value} walks (n={n}, j={j})")
    return _walk_stream(n, j, model)


def _walk_stream(n: int, j: int, model: ChainModel) -> Iterator[Walk]:
    rules = WalkRules(model)
    length = 2 * n
    ups = [Step.up(c) for c in range(1, j + 1)]
    downs = {c: Step.down(c) for c in range(1, j + 1)}
    flat = Step.flat()
    prefix: List[Step] = []
    stack: List[int] = []

    def extend(position: int) -> Iterator[Walk]:
        if position == length:
            yield Walk(tuple(prefix), model, j)
            return
        remaining = length - position - 1
        height = len(stack)
        if height + 1 <= remaining:
            for step in ups:
                prefix.append(step)
                stack.append(step.color)
                yield from extend(position + 1)
                stack.pop()
                prefix.pop()
        if rules.allows_flat and height <= remaining:
            prefix.append(flat)
            yield from extend(position + 1)
            prefix.pop()
        if height >= 1:
            color = stack.pop()
            prefix.append(downs[color])
            yield from extend(position + 1)
            prefix.pop()
            stack.append(color)

    return extend(0)


def flat_walk(n: int, j: int = 1) -> Walk:
    return Walk(tuple(Step(StepKind.flat) for _ in range(2 * n)), ChainModel.motzkin, j)
