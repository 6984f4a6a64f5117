"""SVG output: structure, coordinates, determinism, error handling."""

import xml.etree.ElementTree as ET

import pytest

from arithbilliards.billiards import PathKind, enumerate_paths, simulate
from arithbilliards.core import DirectionMask, GridSpec, Point
from arithbilliards.render import RenderOptions, render_grid

SVG_NS = "{http://www.w3.org/2000/svg}"


def parse(svg: str) -> ET.Element:
    return ET.fromstring(svg)


def elements(root, tag):
    return root.findall(f".//{SVG_NS}{tag}")


class TestStructure:
    def test_6x4_with_all_paths(self):
        g = GridSpec((6, 4))
        svg = render_grid(g, enumerate_paths(g))
        root = parse(svg)
        assert len(elements(root, "polyline")) == 3
        assert len(elements(root, "rect")) == 1
        assert len(elements(root, "line")) == (6 - 1) + (4 - 1)

    def test_unit_square_empty(self):
        svg = render_grid(GridSpec((1, 1)), [])
        root = parse(svg)
        assert len(elements(root, "polyline")) == 0
        assert len(elements(root, "line")) == 0
        assert len(elements(root, "rect")) == 1

    def test_octagon_trajectory(self):
        g = GridSpec((4, 3))
        traj = simulate(g, Point((2, 2)), DirectionMask.ascending(2), 8)
        svg = render_grid(g, [traj])
        (poly,) = elements(parse(svg), "polyline")
        pairs = poly.attrib["points"].split()
        assert len(pairs) == 9  # eight segments
        assert pairs[0] == pairs[-1]

    def test_polyline_segment_counts(self):
        # open paths draw half a period, closed paths a full one
        g = GridSpec((6, 4))
        svg = render_grid(g, enumerate_paths(g))
        lengths = sorted(
            len(poly.attrib["points"].split()) - 1
            for poly in elements(parse(svg), "polyline")
        )
        assert lengths == [12, 12, 24]

    def test_open_paths_start_at_a_vertex(self):
        g = GridSpec((6, 4))
        opens = [p for p in enumerate_paths(g) if p.kind is PathKind.OPEN]
        svg = render_grid(g, opens)
        for poly in elements(parse(svg), "polyline"):
            first = poly.attrib["points"].split()[0]
            x, y = (int(v) for v in first.split(","))
            opts = RenderOptions()
            gx = (x - opts.margin) / opts.cell_size
            gy = 4 - (y - opts.margin) / opts.cell_size
            assert gx in (0, 6) and gy in (0, 4)


class TestCoordinates:
    def test_lattice_mapping_and_y_flip(self):
        g = GridSpec((2, 2))
        traj = simulate(g, Point((0, 0)), DirectionMask.ascending(2), 1)
        opts = RenderOptions(cell_size=10, margin=5)
        (poly,) = elements(parse(render_grid(g, [traj], opts)), "polyline")
        # (0,0) is bottom-left, so it maps to (margin, margin + cell*m2)
        assert poly.attrib["points"] == "5,25 15,15"

    def test_palette_cycling(self):
        g = GridSpec((6, 4))
        opts = RenderOptions(palette=("red", "gold"))
        polys = elements(parse(render_grid(g, enumerate_paths(g), opts)), "polyline")
        assert [p.attrib["stroke"] for p in polys] == ["red", "gold", "red"]


class TestDeterminism:
    def test_byte_identical_output(self):
        g = GridSpec((6, 4))
        a = render_grid(g, enumerate_paths(g))
        b = render_grid(g, enumerate_paths(g))
        assert a.encode("utf-8") == b.encode("utf-8")


class TestErrors:
    def test_rejects_non_planar_grid(self):
        with pytest.raises(ValueError):
            render_grid(GridSpec((2, 2, 2)), [])

    def test_rejects_empty_palette(self):
        with pytest.raises(ValueError):
            render_grid(GridSpec((2, 2)), [], RenderOptions(palette=()))

    def test_rejects_bad_cell_size(self):
        with pytest.raises(ValueError):
            RenderOptions(cell_size=0)

    def test_rejects_unknown_items(self):
        with pytest.raises(TypeError):
            render_grid(GridSpec((2, 2)), ["not a path"])
