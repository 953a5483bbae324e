"""DOT and SVG emitters.

The DOT output is the dual graph as an undirected multigraph (loops
allowed).  The SVG is a combinatorial schematic of the fiber: one
annulus glyph per roundabout on a ring layout, one band glyph per
divide edge attached at the rotation position of its darts, and the
band sides tinted by the boundary component running along them.  No
attempt is made at a metric drawing; the picture only shows how the
pieces meet.
"""

from __future__ import annotations

import math

from .divide import DualGraph
from .fiber import FiberComplex, band_dart

SVG_NS = "http://www.w3.org/2000/svg"


def emit_dot(dual: DualGraph, name: str = "dual") -> str:
    lines = [f"graph {name} {{"]
    lines.append("  node [shape=circle];")
    for i in range(dual.num_vertices):
        lines.append(f"  c{i};")
    for a, b in dual.edges:
        lines.append(f"  c{a} -- c{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _color(index: int, total: int) -> str:
    hue = round(360 * index / max(total, 1))
    return f"hsl({hue}, 70%, 42%)"


def _fmt(x: float) -> str:
    return f"{x:.1f}"


def emit_svg(fiber: FiberComplex) -> str:
    v = len(fiber.roundabouts)
    cycles = fiber.boundary_cycles
    orbit_of = {}
    for i, cycle in enumerate(cycles):
        for d in cycle:
            orbit_of[d] = i
    colors = [_color(i, len(cycles)) for i in range(len(cycles))]

    legend = (
        f"{v} roundabouts, {len(fiber.bands)} bands, "
        f"{len(cycles)} boundary components, chi={fiber.euler_char}, genus {fiber.genus}"
    )

    if v == 0:
        size = 240
        mid = size / 2
        body = [
            f'<circle class="roundabout-outer" cx="{mid}" cy="{mid}" r="70" '
            f'fill="#f2f2f2" stroke="{colors[0]}" stroke-width="4"/>',
            f'<circle class="roundabout-inner" cx="{mid}" cy="{mid}" r="34" '
            f'fill="#ffffff" stroke="{colors[1]}" stroke-width="4"/>',
        ]
        return _svg_document(size, size, legend, body)

    ring = max(150.0, 46.0 * v / math.pi + 60.0)
    r_out, r_in = 34.0, 16.0
    size = 2 * (ring + r_out + 56.0)
    mid = size / 2

    centers = []
    for w in range(v):
        theta = 2 * math.pi * w / v - math.pi / 2
        centers.append((mid + ring * math.cos(theta), mid + ring * math.sin(theta)))

    def foot(dart: int) -> tuple[float, float, float]:
        w = fiber.divide.map.vertex_of(dart)
        pos = fiber.roundabouts[w].index(dart)
        phi = 2 * math.pi * w / v - math.pi / 2 + math.pi / 4 + pos * math.pi / 2
        cx, cy = centers[w]
        return cx + r_out * math.cos(phi), cy + r_out * math.sin(phi), phi

    body = []
    for x, y in fiber.bands:
        x1, y1, _ = foot(x)
        x2, y2, _ = foot(y)
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        if fiber.divide.map.vertex_of(x) == fiber.divide.map.vertex_of(y):
            # loop band: bow outward from its own roundabout
            cx, cy = centers[fiber.divide.map.vertex_of(x)]
            norm = math.hypot(mx - cx, my - cy) or 1.0
            qx = mx + (mx - cx) / norm * 70.0
            qy = my + (my - cy) / norm * 70.0
        else:
            # bow gently toward the middle of the picture
            norm = math.hypot(mid - mx, mid - my) or 1.0
            qx = mx + (mid - mx) / norm * 24.0
            qy = my + (mid - my) / norm * 24.0
        path = f"M {_fmt(x1)} {_fmt(y1)} Q {_fmt(qx)} {_fmt(qy)} {_fmt(x2)} {_fmt(y2)}"
        body.append(
            f'<path class="band-body" d="{path}" fill="none" stroke="#c9c9c9" '
            f'stroke-width="11" stroke-linecap="round"/>'
        )
        # side tints: the boundary components along the two rims of the band
        dx, dy = x2 - x1, y2 - y1
        norm = math.hypot(dx, dy) or 1.0
        ox, oy = -dy / norm * 4.5, dx / norm * 4.5
        for spine_dart, sign in ((band_dart(x), 1), (band_dart(y), -1)):
            color = colors[orbit_of[spine_dart]]
            sx, sy = ox * sign, oy * sign
            side = (
                f"M {_fmt(x1 + sx)} {_fmt(y1 + sy)} "
                f"Q {_fmt(qx + sx)} {_fmt(qy + sy)} {_fmt(x2 + sx)} {_fmt(y2 + sy)}"
            )
            body.append(
                f'<path class="band-side" d="{side}" fill="none" stroke="{color}" stroke-width="2"/>'
            )
    for w, (cx, cy) in enumerate(centers):
        body.append(
            f'<circle class="roundabout-outer" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{r_out}" '
            f'fill="#f2f2f2" stroke="#444444" stroke-width="2"/>'
        )
        body.append(
            f'<circle class="roundabout-inner" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{r_in}" '
            f'fill="#ffffff" stroke="#444444" stroke-width="2"/>'
        )
        body.append(
            f'<text class="roundabout-label" x="{_fmt(cx)}" y="{_fmt(cy + 4)}" '
            f'font-size="11" text-anchor="middle" fill="#444444">w{w}</text>'
        )
    return _svg_document(size, size, legend, body)


def _svg_document(width: float, height: float, legend: str, body: list[str]) -> str:
    lines = [
        f'<svg xmlns="{SVG_NS}" version="1.1" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<text class="legend" x="10" y="18" font-size="12" fill="#222222">{legend}</text>',
    ]
    lines.extend(body)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
