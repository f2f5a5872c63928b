"""Schematic SVG output for grids, triples and sibling families.

Everything is plotted at its complex coordinates with the imaginary
axis pointing up. Labels show roots, not values. Output is a pure
function of the plot spec (fixed formatting, no timestamps), so golden
files stay byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .correspond import ArithTriplet, LegTriple, ZeroSumTriple, to_zero_sum, triplets_from_triple
from .grids import MagicSquare, NotAGap
from .siblings import FloatTriplet, grid_siblings, pseudo_grid

STYLE_COLORS = {
    "grid": "#1f66b4",
    "older": "#2c9a2c",
    "younger": "#d62f28",
    "triple": "#d62f28",
    "triplet": "#666666",
    "pseudo": "#e09c00",
    "reference": "#999999",
}


@dataclass(frozen=True)
class PlotElement:
    kind: str  # "point" | "segment" | "triangle"
    points: tuple[complex, ...]
    label: str | None = None
    style: str = "grid"


@dataclass
class PlotSpec:
    elements: list[PlotElement] = field(default_factory=list)
    viewport: tuple[float, float, float, float] | None = None  # xmin, xmax, ymin, ymax
    scale: float = 1.0

    def add_point(self, z: complex, label: str | None = None, style: str = "grid"):
        self.elements.append(PlotElement("point", (complex(z),), label, style))

    def add_segment(self, pts, style: str = "grid"):
        self.elements.append(PlotElement("segment", tuple(complex(p) for p in pts), None, style))

    def add_triangle(self, a, b, c, style: str = "triple"):
        self.elements.append(
            PlotElement("triangle", (complex(a), complex(b), complex(c)), None, style)
        )


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def emit_svg(spec: PlotSpec, *, size: int = 640) -> str:
    """Render the spec as a standalone SVG 1.1 document.

    The origin is always drawn as a small reference cross (the zero-sum
    triangles are centered there). An empty spec produces an empty
    viewport document rather than failing.
    """
    pts = [p for el in spec.elements for p in el.points]
    if spec.viewport is not None:
        xmin, xmax, ymin, ymax = spec.viewport
    elif pts:
        xs = [p.real for p in pts] + [0.0]
        ys = [p.imag for p in pts] + [0.0]
        xmin, xmax = min(xs), max(xs)
        ymin, ymax = min(ys), max(ys)
    else:
        xmin = ymin = -1.0
        xmax = ymax = 1.0
    span = max(xmax - xmin, ymax - ymin, 1e-9)
    margin = 0.08 * span
    xmin, xmax = xmin - margin, xmax + margin
    ymin, ymax = ymin - margin, ymax + margin
    width = xmax - xmin
    height = ymax - ymin
    px = size / max(width, height)

    def sx(x: float) -> str:
        return _fmt((x - xmin) * px)

    def sy(y: float) -> str:
        # imaginary axis up: SVG y grows downward
        return _fmt((ymax - y) * px)

    marker_r = _fmt(0.006 * size)
    stroke = _fmt(0.003 * size)
    out = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width * px)}" height="{_fmt(height * px)}" '
        f'viewBox="0 0 {_fmt(width * px)} {_fmt(height * px)}">'
    )
    out.append('<rect width="100%" height="100%" fill="white"/>')
    # origin reference cross
    cross = 0.01 * size
    ox, oy = (0.0 - xmin) * px, (ymax - 0.0) * px
    color = STYLE_COLORS["reference"]
    out.append(
        f'<path d="M {_fmt(ox - cross)} {_fmt(oy)} H {_fmt(ox + cross)} '
        f'M {_fmt(ox)} {_fmt(oy - cross)} V {_fmt(oy + cross)}" '
        f'stroke="{color}" stroke-width="{stroke}" fill="none"/>'
    )
    for el in spec.elements:
        color = STYLE_COLORS.get(el.style, "#000000")
        if el.kind == "point":
            p = el.points[0]
            out.append(
                f'<circle cx="{sx(p.real)}" cy="{sy(p.imag)}" r="{marker_r}" fill="{color}"/>'
            )
            if el.label:
                out.append(
                    f'<text x="{sx(p.real)}" y="{_fmt((ymax - p.imag) * px - 0.012 * size)}" '
                    f'font-size="{_fmt(0.018 * size)}" font-family="monospace" '
                    f'fill="{color}" text-anchor="middle">{_escape(el.label)}</text>'
                )
        elif el.kind == "segment":
            coords = " ".join(f"{sx(p.real)},{sy(p.imag)}" for p in el.points)
            out.append(
                f'<polyline points="{coords}" stroke="{color}" '
                f'stroke-width="{stroke}" fill="none"/>'
            )
        elif el.kind == "triangle":
            coords = " ".join(f"{sx(p.real)},{sy(p.imag)}" for p in el.points)
            out.append(
                f'<polygon points="{coords}" stroke="{color}" '
                f'stroke-width="{stroke}" fill="none"/>'
            )
        else:
            raise ValueError(f"unknown element kind {el.kind!r}")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


# -- spec builders ---------------------------------------------------------------


def grid_plot(sq: MagicSquare, *, siblings: bool = False, rotate_older: bool = False) -> PlotSpec:
    """Grid values as points (labeled by root), optionally with siblings.

    rotate_older multiplies older-sibling values by -1 when plotting,
    which parks them in the quadrant opposite the grid instead of on top
    of it; geometry only, nothing arithmetic depends on it.
    """
    spec = PlotSpec()
    for r in range(3):
        for c in range(3):
            v = complex(sq.value(r, c))
            root = sq.root(r, c)
            label = str(root) if root is not None else str(sq.value(r, c))
            spec.add_point(v, label=label, style="grid")
    if siblings:
        fam = grid_siblings(sq)
        for entry in fam.entries:
            for trip, style in ((entry.older, "older"), (entry.younger, "younger")):
                vals = [complex(v) for v in trip.values]
                if style == "older" and rotate_older:
                    vals = [-v for v in vals]
                spec.add_segment(vals, style=style)
        # annotate older-sibling pseudo-grids, but only when they clear the
        # near-miss threshold (grids covering the origin never do)
        if not rotate_older:
            for direction in ("rows", "cols"):
                try:
                    pg = pseudo_grid(sq, direction)
                except NotAGap:
                    break
                if pg.near_miss:
                    spec.add_segment([complex(m) for m in pg.midpoints], style="pseudo")
    return spec


def triple_plot(obj: LegTriple | ZeroSumTriple, *, siblings: bool = True) -> PlotSpec:
    """Zero-sum triangle (centroid at the origin) plus its three triplets."""
    z = to_zero_sum(obj) if isinstance(obj, LegTriple) else obj
    spec = PlotSpec()
    squares = [complex(c.square()) for c in z.components]
    spec.add_triangle(*squares, style="triple")
    for comp, sqv in zip(z.components, squares):
        spec.add_point(sqv, label=str(comp), style="grid")
    if siblings:
        for trip in triplets_from_triple(z):
            spec.add_segment([complex(v) for v in trip.values], style="triplet")
    return spec


def triplet_plot(t: ArithTriplet | FloatTriplet) -> PlotSpec:
    spec = PlotSpec()
    spec.add_segment([complex(v) for v in t.values], style="triplet")
    return spec
