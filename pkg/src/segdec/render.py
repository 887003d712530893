"""Segment geometry plus text-art and SVG renderers.

Geometry lives in a glyph box 1.0 wide and 2.0 tall, y growing downward.
Segments a..g sit in the usual seven-segment places; h is a diagonal in the
upper cell and i, j are parallel diagonals in the lower cell. Every segment
is a straight stroke of the same length.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence
from xml.sax.saxutils import quoteattr

from .errors import DomainError
from .glyphs import SEGMENTS, SegmentSet

Point = tuple[float, float]

_K = 0.4 / math.sqrt(2)  # half-extent of a 0.8-long diagonal

DEFAULT_ENDPOINTS: dict[str, tuple[Point, Point]] = {
    "a": ((0.1, 0.0), (0.9, 0.0)),
    "b": ((1.0, 0.1), (1.0, 0.9)),
    "c": ((1.0, 1.1), (1.0, 1.9)),
    "d": ((0.1, 2.0), (0.9, 2.0)),
    "e": ((0.0, 1.1), (0.0, 1.9)),
    "f": ((0.0, 0.1), (0.0, 0.9)),
    "g": ((0.1, 1.0), (0.9, 1.0)),
    "h": ((0.5 - _K, 0.5 + _K), (0.5 + _K, 0.5 - _K)),
    "i": ((0.35 - _K, 1.65 - _K), (0.35 + _K, 1.65 + _K)),
    "j": ((0.65 - _K, 1.35 - _K), (0.65 + _K, 1.35 + _K)),
}


def _length(seg: tuple[Point, Point]) -> float:
    (x0, y0), (x1, y1) = seg
    return math.hypot(x1 - x0, y1 - y0)


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def share_interior(s: tuple[Point, Point], t: tuple[Point, Point], eps: float = 1e-12) -> bool:
    """True when two closed segments meet anywhere other than a shared endpoint
    touching end-to-end."""
    p, q = s
    r, u = t
    d1, d2 = _cross(r, u, p), _cross(r, u, q)
    d3, d4 = _cross(p, q, r), _cross(p, q, u)
    if abs(d1) < eps and abs(d2) < eps:
        # Collinear: project onto the dominant axis and measure overlap.
        axis = 0 if abs(q[0] - p[0]) >= abs(q[1] - p[1]) else 1
        lo1, hi1 = sorted((p[axis], q[axis]))
        lo2, hi2 = sorted((r[axis], u[axis]))
        return min(hi1, hi2) - max(lo1, lo2) > eps
    if (d1 > eps and d2 > eps) or (d1 < -eps and d2 < -eps):
        return False
    if (d3 > eps and d4 > eps) or (d3 < -eps and d4 < -eps):
        return False
    # They meet; allowed only if the meeting point is an endpoint of both.
    return not any(
        math.dist(a, b) < 1e-9 for a in (p, q) for b in (r, u)
    )


@dataclass(frozen=True)
class SegmentGeometry:
    endpoints: Mapping[str, tuple[Point, Point]]
    thickness: float = 0.12

    def __post_init__(self):
        problems = self.problems()
        if problems:
            raise DomainError("invalid geometry: " + "; ".join(problems))

    def problems(self) -> list[str]:
        found = []
        if sorted(self.endpoints) != list(SEGMENTS):
            return [f"expected segments a..j, got {sorted(self.endpoints)}"]
        for s, ((x0, y0), (x1, y1)) in self.endpoints.items():
            if not all(0.0 <= v <= 1.0 for v in (x0, x1)) or not all(
                0.0 <= v <= 2.0 for v in (y0, y1)
            ):
                found.append(f"segment {s} leaves the glyph box")
        lengths = {s: _length(seg) for s, seg in self.endpoints.items()}
        ref = lengths["a"]
        if ref <= 0:
            found.append("segments must have positive length")
        for s, n in lengths.items():
            if abs(n - ref) > 1e-9:
                found.append(f"segment {s} length {n!r} differs from {ref!r}")
        for s, t in combinations(SEGMENTS, 2):
            if share_interior(self.endpoints[s], self.endpoints[t]):
                found.append(f"segments {s} and {t} overlap")
        if self.thickness <= 0:
            found.append("thickness must be positive")
        return found

    def length(self, segment: str) -> float:
        return _length(self.endpoints[segment])

    @classmethod
    def from_json(cls, text: str) -> SegmentGeometry:
        data = json.loads(text)
        endpoints = {
            s: (tuple(p0), tuple(p1)) for s, (p0, p1) in data["segments"].items()
        }
        return cls(endpoints, data.get("thickness", 0.12))

    def to_json(self) -> str:
        data = {
            "segments": {s: [list(p) for p in self.endpoints[s]] for s in SEGMENTS},
            "thickness": self.thickness,
        }
        return json.dumps(data, indent=2)


def default_geometry() -> SegmentGeometry:
    return SegmentGeometry(dict(DEFAULT_ENDPOINTS))


@dataclass(frozen=True)
class RenderOptions:
    height: int = 12
    lit: str = "#d00000"
    unlit: str = "#eeeeee"
    spacing: int = 2
    ghosts: bool = False
    geometry: SegmentGeometry = field(default_factory=default_geometry)

    def __post_init__(self):
        if self.height < 8:
            raise DomainError("render height must be at least 8")
        if self.spacing < 0:
            raise DomainError("spacing must be non-negative")

    @property
    def width(self) -> int:
        """Text columns per glyph; terminal cells are roughly twice as tall as
        wide, so a 1:2 box needs about as many columns as rows."""
        return self.height


GHOST = "."
_TRIM = 0.1


def _stroke_char(seg: tuple[Point, Point]) -> str:
    (x0, y0), (x1, y1) = seg
    dx, dy = x1 - x0, y1 - y0
    if abs(dy) < 1e-9:
        return "-"
    if abs(dx) < 1e-9:
        return "|"
    # screen y grows downward: right-and-up is '/'
    return "/" if dx * dy < 0 else "\\"


def _distance(p: Point, seg: tuple[Point, Point]) -> float:
    (x0, y0), (x1, y1) = seg
    dx, dy = x1 - x0, y1 - y0
    t = ((p[0] - x0) * dx + (p[1] - y0) * dy) / (dx * dx + dy * dy)
    t = min(1.0, max(0.0, t))
    return math.hypot(p[0] - (x0 + t * dx), p[1] - (y0 + t * dy))


def stroke_cells(opts: RenderOptions) -> dict[str, list[tuple[int, int]]]:
    """Grid cells owned by each segment. A cell hit by several segments goes
    to the one passing closest to its centre, so every drawn cell identifies
    exactly one segment."""
    rows, cols = opts.height, opts.width
    endpoints = opts.geometry.endpoints
    owners: dict[tuple[int, int], set[str]] = {}
    for s, ((x0, y0), (x1, y1)) in endpoints.items():
        steps = 4 * max(rows, cols)
        # Stay clear of the endpoints; they sit within a cell of neighbours.
        for k in range(steps + 1):
            t = _TRIM + (1 - 2 * _TRIM) * k / steps
            u, v = x0 + t * (x1 - x0), y0 + t * (y1 - y0)
            cell = (round(v / 2.0 * (rows - 1)), round(u * (cols - 1)))
            owners.setdefault(cell, set()).add(s)
    cells: dict[str, list[tuple[int, int]]] = {s: [] for s in SEGMENTS}
    for (r, c), who in sorted(owners.items()):
        centre = (c / (cols - 1), 2.0 * r / (rows - 1))
        best = min(sorted(who), key=lambda s: _distance(centre, endpoints[s]))
        cells[best].append((r, c))
    return cells


def render_text(pattern: SegmentSet, opts: RenderOptions | None = None) -> str:
    """Draw one glyph as text. Rows are newline-separated without trailing
    spaces; the grid is always ``opts.height`` rows."""
    opts = opts or RenderOptions()
    grid = [[" "] * opts.width for _ in range(opts.height)]
    for s, cells in stroke_cells(opts).items():
        if s in pattern:
            ch = _stroke_char(opts.geometry.endpoints[s])
        elif opts.ghosts:
            ch = GHOST
        else:
            continue
        for r, c in cells:
            grid[r][c] = ch
    return "\n".join("".join(row).rstrip() for row in grid)


def render_text_row(patterns: Sequence[SegmentSet], opts: RenderOptions | None = None) -> str:
    """Several glyphs side by side."""
    opts = opts or RenderOptions()
    glyphs = [render_text(p, opts).split("\n") for p in patterns]
    gap = " " * opts.spacing
    lines = []
    for r in range(opts.height):
        parts = [g[r].ljust(opts.width) for g in glyphs]
        lines.append(gap.join(parts).rstrip())
    return "\n".join(lines)


def read_text(text: str, opts: RenderOptions | None = None) -> SegmentSet:
    """Recover the lit segments from a single rendered glyph."""
    opts = opts or RenderOptions()
    grid = [row.ljust(opts.width) for row in text.split("\n")]
    lit = []
    for s, cells in stroke_cells(opts).items():
        ch = _stroke_char(opts.geometry.endpoints[s])
        if cells and all(grid[r][c] == ch for r, c in cells):
            lit.append(s)
    return SegmentSet.of(lit)


def _fmt(v: float) -> str:
    return f"{v:.3f}".rstrip("0").rstrip(".")


def render_svg(patterns: Sequence[SegmentSet], opts: RenderOptions | None = None) -> str:
    """SVG document with one ``<g>`` per glyph and one ``<line>`` per lit segment
    (plus ``class="unlit"`` lines when ghosts are enabled)."""
    opts = opts or RenderOptions()
    scale = opts.height / 2.0
    margin = opts.geometry.thickness * scale
    advance = scale + opts.spacing * scale / 4
    width = margin * 2 + advance * len(patterns) - (opts.spacing * scale / 4 if patterns else 0)
    height = margin * 2 + 2 * scale
    stroke_w = _fmt(opts.geometry.thickness * scale)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    for n, pattern in enumerate(patterns):
        dx = margin + n * advance
        out.append(
            f'  <g class="glyph" data-segments={quoteattr(pattern.to_bits())} '
            f'transform="translate({_fmt(dx)},{_fmt(margin)})">'
        )
        for s in SEGMENTS:
            lit = s in pattern
            if not lit and not opts.ghosts:
                continue
            (x0, y0), (x1, y1) = opts.geometry.endpoints[s]
            out.append(
                f'    <line class="{"lit" if lit else "unlit"}" data-segment="{s}" '
                f'x1="{_fmt(x0 * scale)}" y1="{_fmt(y0 * scale)}" '
                f'x2="{_fmt(x1 * scale)}" y2="{_fmt(y1 * scale)}" '
                f'stroke={quoteattr(opts.lit if lit else opts.unlit)} '
                f'stroke-width="{stroke_w}" stroke-linecap="round"/>'
            )
        out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
