"""
Unit tests for the SVG renderers.
"""

import xml.etree.ElementTree as ET

import pytest

from rainbowtn.core import constants
from rainbowtn.core.exceptions import (
    InvalidParameterError,
    InvalidTilingError,
    InvalidWalkError,
)
from rainbowtn.core.network import Tiling, TileKind, geometry, tile_set, walk_to_tiling
from rainbowtn.core.rendering import color_for, render, render_arcs, render_tiling, render_walk
from rainbowtn.core.schemas import ChainModel
from rainbowtn.core.walks import parse_walk

NS = "{http://www.w3.org/2000/svg}"


def _parse(text):
    return ET.fromstring(text)


def _with_class(root, tag, css_class):
    return [e for e in root.iter(f"{NS}{tag}") if e.get("class") == css_class]


@pytest.mark.unit
class TestRenderWalk:
    def test_heights_are_recorded(self):
        root = _parse(render_walk(parse_walk("U1 U2 D2 D1")))
        assert root.tag == f"{NS}svg"
        (polyline,) = root.iter(f"{NS}polyline")
        assert polyline.get("data-heights") == "0 1 2 1 0"

    def test_one_segment_per_step(self):
        root = _parse(render_walk(parse_walk("U1 F F D1")))
        (steps,) = _with_class(root, "g", "steps")
        lines = list(steps)
        assert [line.get("data-step") for line in lines] == ["U1", "F", "F", "D1"]
        assert lines[0].get("stroke") == constants.COLOR_PALETTE[0]
        assert lines[1].get("stroke") == constants.FLAT_STROKE

    def test_flat_walk_has_a_baseline(self):
        root = _parse(render_walk(parse_walk("F F")))
        assert len(_with_class(root, "line", "baseline")) == 1

    def test_invalid_walk(self):
        with pytest.raises(InvalidWalkError):
            render_walk(parse_walk("D1 U1"))

    def test_output_is_deterministic(self):
        walk = parse_walk("U1 U2 D2 F F D1", colors=2)
        assert render_walk(walk) == render_walk(walk)
        assert render_walk(walk).endswith("</svg>\n")


@pytest.mark.unit
class TestRenderArcs:
    def test_one_arc_per_pair(self):
        root = _parse(render_arcs(parse_walk("U1 U2 D2 D1")))
        arcs = _with_class(root, "path", "arc")
        assert [a.get("data-sites") for a in arcs] == ["1 4", "2 3"]
        assert arcs[0].get("stroke") == constants.COLOR_PALETTE[0]
        assert arcs[1].get("data-color") == "2"

    def test_sites_are_drawn(self):
        root = _parse(render_arcs(parse_walk("F U1 D1 F")))
        (sites,) = _with_class(root, "g", "sites")
        assert len(list(sites)) == 4
        assert len(_with_class(root, "path", "arc")) == 1

    def test_color_palette_wraps(self):
        size = len(constants.COLOR_PALETTE)
        assert color_for(size + 1) == color_for(1)
        assert color_for(None) == constants.FLAT_STROKE


@pytest.mark.unit
class TestRenderTiling:
    def test_cells_and_tiles(self):
        root = _parse(render_tiling(walk_to_tiling(parse_walk("U1 F F D1"))))
        assert len(_with_class(root, "rect", "cell")) == 6
        groups = [g for g in root.iter(f"{NS}g") if g.get("data-tile")]
        kinds = [g.get("data-tile") for g in groups]
        assert kinds.count(TileKind.flat_stop.value) == 2
        assert kinds.count(TileKind.horizontal.value) == 2
        arrowless = [g for g in groups if g.get("class") == "arrowless"]
        assert len(arrowless) == 2

    def test_leg_labels(self):
        root = _parse(render_tiling(walk_to_tiling(parse_walk("U1 F F D1"))))
        labels = [e.text for e in _with_class(root, "text", "leg-label")]
        assert labels == ["+1", "0", "0", "-1"]

    def test_bond_labels(self):
        root = _parse(render_tiling(walk_to_tiling(parse_walk("U1 F F D1"))))
        labels = [e.text for e in _with_class(root, "text", "bond-label")]
        # cuts 1, 2 (two rows) and 3
        assert labels == ["+1", "+1", "ω", "+1"]

    def test_invalid_tiling(self):
        empty = Tiling(geometry(2), tile_set(ChainModel.motzkin, 1), {})
        with pytest.raises(InvalidTilingError):
            render_tiling(empty)

    def test_deterministic(self):
        tiling = walk_to_tiling(parse_walk("U1 U2 D2 D1"))
        assert render_tiling(tiling) == render_tiling(tiling)


@pytest.mark.unit
class TestRenderDispatch:
    @pytest.mark.parametrize("target", ["walk", "arcs"])
    def test_walk_targets(self, target):
        walk = parse_walk("U1 D1")
        assert render(target, walk).startswith("<svg")

    def test_tiling_target(self):
        tiling = walk_to_tiling(parse_walk("U1 D1"))
        assert render("tiling", tiling) == render_tiling(tiling)

    def test_unknown_target(self):
        with pytest.raises(InvalidParameterError):
            render("mesh", parse_walk("U1 D1"))
