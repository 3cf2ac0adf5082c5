"""
Deterministic SVG figures of walks, chord diagrams and tilings.

All coordinates are integers or halves printed with a fixed format and
elements are emitted in a fixed order, so equal inputs give equal bytes.
"""

import xml.etree.ElementTree as ET
from typing import Iterable, Optional, Tuple, Union

from .. import constants
from ..exceptions import InvalidParameterError, InvalidTilingError, InvalidWalkError
from ..network import Tiling, TileKind, validate_tiling
from ..walks import Walk, format_walk, height_profile, matched_pairs, validate

SVG_NAMESPACE = "http://www.w3.org/2000/svg"

Point = Tuple[float, float]


def _num(value: float) -> str:
    return format(value, "g")


def _points(points: Iterable[Point]) -> str:
    return " ".join(f"{_num(x)},{_num(y)}" for x, y in points)


def color_for(color: Optional[int]) -> str:
    if color is None:
        return constants.FLAT_STROKE
    return constants.COLOR_PALETTE[(color - 1) % len(constants.COLOR_PALETTE)]


def svgroot(width: float, height: float) -> ET.Element:
    return ET.Element(
        "svg",
        xmlns=SVG_NAMESPACE,
        version="1.1",
        width=_num(width),
        height=_num(height),
        viewBox=f"0 0 {_num(width)} {_num(height)}",
    )


def svgline(parent: ET.Element, start: Point, end: Point, stroke: str, **extra) -> ET.Element:
    return ET.SubElement(
        parent,
        "line",
        x1=_num(start[0]),
        y1=_num(start[1]),
        x2=_num(end[0]),
        y2=_num(end[1]),
        stroke=stroke,
        **extra,
    )


def svgtext(parent: ET.Element, at: Point, text: str, **extra) -> ET.Element:
    element = ET.SubElement(
        parent,
        "text",
        x=_num(at[0]),
        y=_num(at[1]),
        **{"text-anchor": "middle", "font-size": "10", "font-family": "monospace"},
        **extra,
    )
    element.text = text
    return element


def to_text(svg: ET.Element) -> str:
    return ET.tostring(svg, encoding="unicode") + "\n"


def _require_valid_walk(walk: Walk) -> None:
    report = validate(walk)
    if not report.is_valid:
        raise InvalidWalkError(
            f"cannot render invalid walk {format_walk(walk)}: "
            f"{report.violations[0].message}"
        )


def render_walk(walk: Walk) -> str:
    """
    Height profile as one polyline plus a colored segment per step.

    The polyline carries ``data-heights`` so the figure can be read back.
    """
    _require_valid_walk(walk)
    unit, margin = constants.SVG_UNIT, constants.SVG_MARGIN
    heights = (0,) + height_profile(walk)
    top = max(heights)
    width = 2 * margin + unit * walk.length
    height = 2 * margin + unit * max(top, 1)

    def at(i: int) -> Point:
        return (margin + unit * i, margin + unit * (top - heights[i]))

    svg = svgroot(width, height)
    svgline(
        svg,
        (margin, margin + unit * top),
        (width - margin, margin + unit * top),
        constants.GRID_STROKE,
        **{"class": "baseline"},
    )
    ET.SubElement(
        svg,
        "polyline",
        points=_points(at(i) for i in range(len(heights))),
        fill="none",
        stroke="#000000",
        **{
            "stroke-width": "1",
            "class": "walk",
            "data-heights": " ".join(str(h) for h in heights),
        },
    )
    steps = ET.SubElement(svg, "g", **{"class": "steps"})
    for i, step in enumerate(walk.steps):
        svgline(
            steps,
            at(i),
            at(i + 1),
            color_for(step.color),
            **{"stroke-width": str(constants.SVG_STROKE), "data-step": step.token},
        )
    return to_text(svg)


def render_arcs(walk: Walk) -> str:
    """
    Chord diagram flattened onto a line: one semicircular arc per matched
    pair, colored by the pair, and a dot for every flat site.
    """
    _require_valid_walk(walk)
    unit, margin = constants.SVG_UNIT, constants.SVG_MARGIN
    pairs = sorted(matched_pairs(walk))
    widest = max((y - x for x, y, _ in pairs), default=1)
    width = 2 * margin + unit * walk.length
    baseline = margin + unit * widest / 2
    svg = svgroot(width, baseline + margin)

    def site_x(site: int) -> float:
        return margin + unit * (site - 0.5)

    svgline(
        svg,
        (margin, baseline),
        (width - margin, baseline),
        constants.GRID_STROKE,
        **{"class": "baseline"},
    )
    arcs = ET.SubElement(svg, "g", **{"class": "arcs"})
    for x, y, color in pairs:
        radius = unit * (y - x) / 2
        ET.SubElement(
            arcs,
            "path",
            d=(
                f"M{_num(site_x(x))} {_num(baseline)} "
                f"A{_num(radius)} {_num(radius)} 0 0 1 {_num(site_x(y))} {_num(baseline)}"
            ),
            fill="none",
            stroke=color_for(color),
            **{
                "stroke-width": str(constants.SVG_STROKE),
                "class": "arc",
                "data-sites": f"{x} {y}",
                "data-color": str(color),
            },
        )
    sites = ET.SubElement(svg, "g", **{"class": "sites"})
    for position, step in enumerate(walk.steps, start=1):
        ET.SubElement(
            sites,
            "circle",
            cx=_num(site_x(position)),
            cy=_num(baseline),
            r="3",
            fill=color_for(step.color),
            **{"data-step": step.token},
        )
    return to_text(svg)


# stroke of each tile kind as segments between cell anchors
_TILE_STROKES = {
    TileKind.vertical_up: (("bottom", "top"),),
    TileKind.vertical_down: (("bottom", "top"),),
    TileKind.corner_up_right: (("bottom", "center"), ("center", "right")),
    TileKind.horizontal: (("left", "right"),),
    TileKind.corner_right_down: (("left", "center"), ("center", "bottom")),
    TileKind.flat_run: (("bottom", "top"),),
    TileKind.flat_stop: (("bottom", "center"),),
}


def render_tiling(tiling: Tiling) -> str:
    """
    Cell grid of the pyramid with arrowed (colored) and arrowless (gray,
    dashed) paths, the physical legs below, and edge labels on every leg
    and horizontal bond.
    """
    check = validate_tiling(tiling)
    if not check.valid:
        raise InvalidTilingError(f"cannot render invalid tiling: {check.violation}")
    geom = tiling.geometry
    n = geom.n
    unit, margin = constants.SVG_UNIT, constants.SVG_MARGIN
    width = 2 * margin + unit * geom.length
    height = 2 * margin + unit * (n + 1)
    svg = svgroot(width, height)

    def corner(z: int, y: int) -> Point:
        return (margin + unit * (z - 1), margin + unit * (n - y))

    def anchor(z: int, y: int, where: str) -> Point:
        x0, y0 = corner(z, y)
        half = unit / 2
        return {
            "center": (x0 + half, y0 + half),
            "top": (x0 + half, y0),
            "bottom": (x0 + half, y0 + unit),
            "left": (x0, y0 + half),
            "right": (x0 + unit, y0 + half),
        }[where]

    cells = ET.SubElement(svg, "g", **{"class": "cells"})
    for z, y in geom.cells:
        x0, y0 = corner(z, y)
        ET.SubElement(
            cells,
            "rect",
            x=_num(x0),
            y=_num(y0),
            width=_num(unit),
            height=_num(unit),
            fill="none",
            stroke=constants.GRID_STROKE,
            **{"class": "cell", "data-cell": f"{z} {y}"},
        )

    paths = ET.SubElement(svg, "g", **{"class": "paths"})
    for z, y in geom.cells:
        tile = tiling[(z, y)]
        group = ET.SubElement(
            paths,
            "g",
            **{
                "class": "arrowed" if tile.is_arrowed else "arrowless",
                "data-tile": tile.kind.value,
                "data-cell": f"{z} {y}",
            },
        )
        extra = {"stroke-width": str(constants.SVG_STROKE)}
        if not tile.is_arrowed:
            extra["stroke-dasharray"] = "4 3"
        for start, end in _TILE_STROKES[tile.kind]:
            svgline(
                group, anchor(z, y, start), anchor(z, y, end), color_for(tile.color), **extra
            )

    labels = ET.SubElement(svg, "g", **{"class": "labels"})
    for z, edge in enumerate(tiling.bottom_edges(), start=1):
        foot = anchor(z, geom.bottom(z), "bottom")
        end = (foot[0], foot[1] + unit / 2)
        svgline(labels, foot, end, constants.FLAT_STROKE, **{"class": "leg"})
        svgtext(labels, (end[0], end[1] + 10), str(edge), **{"class": "leg-label"})
    for z in range(1, geom.length):
        for y, value in zip(geom.cut_rows(z), tiling.bond_at(z)):
            x, y_mid = anchor(z, y, "right")
            svgtext(labels, (x, y_mid - 3), str(value), **{"class": "bond-label"})
    return to_text(svg)


def render(target: str, item: Union[Walk, Tiling]) -> str:
    """Dispatch on ``walk``, ``arcs`` or ``tiling``."""
    if target == "walk":
        return render_walk(item)
    if target == "arcs":
        return render_arcs(item)
    if target == "tiling":
        return render_tiling(item)
    raise InvalidParameterError(f"unknown render target {target!r}")
