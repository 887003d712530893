import json
import math
import xml.etree.ElementTree as ET
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from segdec.errors import DomainError
from segdec.glyphs import DisplayMode, SegmentSet, decode
from segdec.render import (
    DEFAULT_ENDPOINTS,
    RenderOptions,
    SegmentGeometry,
    default_geometry,
    read_text,
    render_svg,
    render_text,
    render_text_row,
    share_interior,
)

SVG = "{http://www.w3.org/2000/svg}"
ALL_PATTERNS = [decode(d, m) for m in DisplayMode for d in range(10)]


def test_geometry_uniform_and_disjoint():
    g = default_geometry()
    assert sorted(g.endpoints) == list("abcdefghij")
    lengths = [g.length(s) for s in "abcdefghij"]
    assert max(lengths) - min(lengths) <= 1e-9
    for s, t in combinations("abcdefghij", 2):
        assert not share_interior(g.endpoints[s], g.endpoints[t]), (s, t)


def test_seven_segment_layout():
    g = default_geometry().endpoints
    for s in "adg":
        assert g[s][0][1] == g[s][1][1]
    for s in "bcef":
        assert g[s][0][0] == g[s][1][0]
    assert g["a"][0][1] < g["g"][0][1] < g["d"][0][1]
    assert g["f"][0][0] < g["b"][0][0]


def test_share_interior_cases():
    assert share_interior(((0, 0), (1, 1)), ((0, 1), (1, 0)))
    assert share_interior(((0, 0), (2, 0)), ((1, 0), (3, 0)))
    assert not share_interior(((0, 0), (1, 0)), ((1, 0), (2, 0)))
    assert not share_interior(((0, 0), (1, 0)), ((0, 1), (1, 1)))
    assert share_interior(((0, 0), (2, 0)), ((1, 0), (1, 1)))


def test_geometry_validation_rejects():
    bad = dict(DEFAULT_ENDPOINTS)
    bad["h"] = ((0.0, 0.0), (1.0, 1.0))
    with pytest.raises(DomainError):
        SegmentGeometry(bad)
    crossing = dict(DEFAULT_ENDPOINTS)
    crossing["i"] = ((0.5 - 0.4, 1.5), (0.5 + 0.4, 1.5))
    crossing["j"] = ((0.5, 1.1), (0.5, 1.9))
    with pytest.raises(DomainError):
        SegmentGeometry(crossing)
    missing = {k: v for k, v in DEFAULT_ENDPOINTS.items() if k != "j"}
    with pytest.raises(DomainError):
        SegmentGeometry(missing)


def test_geometry_json_round_trip():
    g = default_geometry()
    again = SegmentGeometry.from_json(g.to_json())
    assert dict(again.endpoints) == dict(g.endpoints)
    json.loads(g.to_json())


def test_options_validation():
    with pytest.raises(DomainError):
        RenderOptions(height=7)


def test_text_blank_and_dimensions():
    opts = RenderOptions(height=10)
    blank = render_text(SegmentSet(), opts)
    assert blank.split("\n") == [""] * 10
    for p in ALL_PATTERNS:
        rows = render_text(p, opts).split("\n")
        assert len(rows) == 10
        assert all(len(r) <= opts.width and r == r.rstrip() for r in rows)


def test_zero_is_a_ring():
    text = render_text(decode(0))
    assert read_text(text) == SegmentSet.of("abcdef")
    assert set(text) <= set(" -|\n")


@pytest.mark.parametrize("height", [8, 9, 12, 16, 31])
def test_text_element_count(height):
    opts = RenderOptions(height=height)
    for p in ALL_PATTERNS:
        assert read_text(render_text(p, opts), opts) == p


@given(st.integers(0, 1023), st.integers(8, 40), st.booleans())
def test_text_recovers_any_pattern(mask, height, ghosts):
    opts = RenderOptions(height=height, ghosts=ghosts)
    p = SegmentSet(mask)
    assert read_text(render_text(p, opts), opts) == p


def test_text_row():
    opts = RenderOptions(height=8, spacing=1)
    row = render_text_row([decode(1), decode(2)], opts).split("\n")
    assert len(row) == 8
    assert all(len(r) <= 2 * opts.width + 1 for r in row)


def _lines(doc, cls="lit"):
    root = ET.fromstring(doc)
    return root, [el for el in root.iter(f"{SVG}line") if el.get("class") == cls]


def test_svg_counts():
    for p in ALL_PATTERNS:
        doc = render_svg([p])
        root, lines = _lines(doc)
        assert len(lines) == len(p)
        assert sorted(el.get("data-segment") for el in lines) == p.labels
    _, lines = _lines(render_svg([decode(5)]))
    assert len(lines) == 7


def test_svg_empty_and_deterministic():
    root, _ = _lines(render_svg([]))
    assert root.tag == f"{SVG}svg"
    assert root.get("viewBox")
    assert list(root.iter(f"{SVG}g")) == []
    pats = [decode(d) for d in range(10)]
    assert render_svg(pats) == render_svg(pats)
    root, _ = _lines(render_svg(pats))
    assert len(list(root.iter(f"{SVG}g"))) == 10


def test_svg_ghosts():
    doc = render_svg([decode(7)], RenderOptions(ghosts=True))
    _, lit = _lines(doc)
    _, unlit = _lines(doc, "unlit")
    assert (len(lit), len(unlit)) == (5, 5)


def test_svg_coordinates_follow_geometry():
    opts = RenderOptions(height=20)
    _, lines = _lines(render_svg([SegmentSet.of("a")], opts))
    (a,) = lines
    assert float(a.get("x1")) == pytest.approx(1.0)
    assert float(a.get("x2")) == pytest.approx(9.0)
    assert math.isclose(float(a.get("y1")), 0.0)
