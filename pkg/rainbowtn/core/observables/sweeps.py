"""Entropy sweeps over a grid of chains and their CSV table."""

import csv
import io
import itertools
import logging
import math
from typing import Any, Iterable, List, Optional, Sequence

from pydantic import ValidationError

from .. import constants
from ..exceptions import RainbowError
from ..schemas import ArithmeticMode, ChainModel, CutRule, SweepPoint, SweepRow
from ..states import entanglement_entropy, entropy_profile
from ..utils import atomic_write, fan_out, format_number, log_method_call


def sweep_grid(
    models: Iterable[ChainModel],
    ns: Iterable[int],
    js: Iterable[int],
    ts: Iterable[Any],
    mode: ArithmeticMode = ArithmeticMode.float,
) -> List[SweepPoint]:
    """Cartesian grid in (model, n, j, t) order; t varies fastest."""
    return [
        SweepPoint(model=model, n=n, j=j, t=t, mode=mode)
        for model, n, j, t in itertools.product(models, ns, js, ts)
    ]


def _quantity(bits: bool) -> str:
    return "entropy_bits" if bits else "entropy"


def _point_rows(point: SweepPoint, cut: CutRule, bits: bool) -> List[SweepRow]:
    quantity = _quantity(bits)
    scale = 1.0 / math.log(2) if bits else 1.0
    try:
        params = point.params()
        if cut == CutRule.half:
            values = {
                point.n: entanglement_entropy(
                    params.n, params.j, params.model, params.t, mode=params.mode
                )
            }
        else:
            profile = entropy_profile(
                params.n, params.j, params.model, params.t, mode=params.mode
            )
            values = dict(enumerate(profile, start=1))
    except (RainbowError, ValidationError, ValueError) as e:
        logging.error(
            f"Entropy failed for {point.model.value} n={point.n} j={point.j} "
            f"t={point.t}: {str(e)}"
        )
        # cut 0 stands for the whole failed profile
        cuts = [point.n] if cut == CutRule.half else [0]
        return [
            SweepRow(
                model=point.model,
                n=point.n,
                j=point.j,
                t=point.t,
                cut=z,
                quantity=quantity,
                mode=point.mode,
                error=str(e),
            )
            for z in cuts
        ]
    return [
        SweepRow(
            model=point.model,
            n=point.n,
            j=point.j,
            t=point.t,
            cut=z,
            quantity=quantity,
            value=value * scale,
            mode=point.mode,
        )
        for z, value in values.items()
    ]


@log_method_call()
def entropy_sweep(
    points: Sequence[SweepPoint],
    cut: CutRule = CutRule.half,
    bits: bool = False,
    max_workers: Optional[int] = None,
) -> List[SweepRow]:
    """
    Entanglement entropy at every grid point, computed concurrently.

    Rows come back in input order (cuts ascending within a point). A failing
    point is logged and yields a row with ``error`` set; the sweep goes on.
    """
    cut = CutRule(cut)
    per_point = fan_out(lambda p: _point_rows(p, cut, bits), list(points), max_workers)
    rows = [row for rows in per_point for row in rows]
    failed = sum(1 for row in rows if row.error)
    logging.info(f"Entropy sweep: {len(points)} points, {len(rows)} rows, {failed} failed")
    return rows


def write_sweep_csv(rows: Sequence[SweepRow], path: Optional[str] = None) -> str:
    """
    Render rows as CSV with a fixed column order and float formatting.

    Failed rows keep an empty value cell. When ``path`` is given the table is
    also written there atomically.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(constants.SWEEP_CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                row.model.value,
                row.n,
                row.j,
                format_number(row.t),
                row.cut,
                row.quantity,
                format_number(row.value),
                row.mode.value,
            ]
        )
    text = buffer.getvalue()
    if path is not None:
        atomic_write(path, text)
    return text
