"""SVG strip diagrams of germ elements.

X is drawn as the upper line, Xi as the lower one, and every integer in
1..DRAWN_PERIODS·N as a dot at a fixed horizontal grid position.  Each arrow
i -> w(i) with both ends on the drawing becomes one path; paths between two
points of the same line bulge into the strip.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from jinja2 import Environment, FileSystemLoader

from ctilde.germ import GermElement
from ctilde.periodic import cycle_decomposition, residue
from ctilde.settings import DRAWN_PERIODS, MARGIN, PERIOD_WIDTH, STRIP_HEIGHT

logger = logging.getLogger(__name__)

_env = Environment(
    loader=FileSystemLoader(str(Path(__file__).parent / "templates")),
    autoescape=True,
    keep_trailing_newline=True,
)

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2")


def _num(value: float) -> str:
    return f"{value:.2f}"


@dataclass(frozen=True)
class Point:
    label: int
    side: str
    cx: str
    cy: str
    label_y: str


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    orbit: int
    color: str
    d: str


def _orbit_table(x: GermElement) -> dict[int, int]:
    """Residue -> index of its cycle, finite cycles first."""
    decomposition = cycle_decomposition(x.perm)
    cycles = list(decomposition.finite_cycles) + [e for e, _ in decomposition.infinite_cycles]
    return {residue(e, x.period): k for k, entries in enumerate(cycles) for e in entries}


def _path(x0: float, y0: float, x1: float, y1: float, x_line: float) -> str:
    if y0 == y1:
        depth = min(STRIP_HEIGHT / 3, abs(x1 - x0) / 2 + 6)
        bulge = depth if y0 == x_line else -depth
        return (
            f"M {_num(x0)} {_num(y0)} "
            f"Q {_num((x0 + x1) / 2)} {_num(y0 + bulge)} {_num(x1)} {_num(y1)}"
        )
    middle = (y0 + y1) / 2
    return (
        f"M {_num(x0)} {_num(y0)} "
        f"C {_num(x0)} {_num(middle)} {_num(x1)} {_num(middle)} {_num(x1)} {_num(y1)}"
    )


def draw(x: GermElement) -> str:
    """Render *x* as a standalone SVG document."""
    strip, period = x.strip, x.period
    count = DRAWN_PERIODS * period
    x_line, xi_line = MARGIN, MARGIN + STRIP_HEIGHT
    step = PERIOD_WIDTH / period

    def position(i: int) -> tuple[float, float]:
        return MARGIN + (i - 1) * step, x_line if strip.in_x(i) else xi_line

    points = []
    for i in range(1, count + 1):
        cx, cy = position(i)
        on_x = strip.in_x(i)
        points.append(
            Point(
                label=i,
                side="x" if on_x else "xi",
                cx=_num(cx),
                cy=_num(cy),
                label_y=_num(cy - 8 if on_x else cy + 16),
            )
        )

    orbits = _orbit_table(x)
    edges = []
    for i in range(1, count + 1):
        j = x.perm(i)
        if j == i or not 1 <= j <= count:
            continue
        orbit = orbits[residue(i, period)]
        edges.append(
            Edge(
                source=i,
                target=j,
                orbit=orbit,
                color=PALETTE[orbit % len(PALETTE)],
                d=_path(*position(i), *position(j), x_line),
            )
        )
    logger.debug("drawing %s: %d points, %d paths", x, len(points), len(edges))

    return _env.get_template("strip.svg.j2").render(
        title=str(x),
        period=period,
        width=_num(2 * MARGIN + DRAWN_PERIODS * PERIOD_WIDTH),
        height=_num(2 * MARGIN + STRIP_HEIGHT),
        x_y=_num(x_line),
        xi_y=_num(xi_line),
        points=points,
        edges=edges,
    )
