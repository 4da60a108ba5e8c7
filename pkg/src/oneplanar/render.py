"""Static SVG rendering of drawings via barycentric layout.

The planarized skeleton is laid out with the corners of a chosen outer
region fixed on a convex polygon and every interior node at the average of
its neighbors (solved exactly, then verified against a positional tolerance
of 1e-9).  Crossed edges are drawn as two straight segments meeting at the
crossing point.  A geometric self-check confirms that recorded crossings
are the only intersections and that they are transversal; failures are
annotated as warnings in the file rather than raised, since correctness is
carried by the combinatorial checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from .core import (
    CombinatorialDrawing,
    PreconditionError,
    Region,
    ident_key,
    planarize,
    _regions_unchecked,
)

POSITION_TOLERANCE = 1e-9
CROSSING_TOLERANCE = 1e-6
_MAX_RELAX_SWEEPS = 200_000


class LayoutError(RuntimeError):
    """Barycentric relaxation did not reach the positional tolerance."""


def _neighbor_multiset(d: CombinatorialDrawing) -> dict[str, list[str]]:
    nbrs: dict[str, list[str]] = {v: [] for v in d.vertices}
    for v, rot in d.rotations.items():
        for h in rot:
            w = d.edges[h.edge][1 - h.end]
            if w != v:  # loops exert no pull
                nbrs[v].append(w)
    return nbrs


def barycentric_layout(
    d: CombinatorialDrawing, boundary_walk: Sequence[str]
) -> dict[str, tuple[float, float]]:
    """Positions with the boundary fixed on a regular polygon.

    ``d`` must be crossing-free (lay out the planarized skeleton).  Interior
    nodes solve the averaging equations exactly; the residual is checked
    against 1e-9 and refined by relaxation sweeps if needed.
    """
    if d.x != 0:
        raise PreconditionError("layout works on the planarized skeleton (x = 0)")
    boundary: list[str] = []
    for v in boundary_walk:
        if v not in boundary:
            boundary.append(v)
    if not boundary:
        raise PreconditionError("boundary walk is empty")

    pos: dict[str, tuple[float, float]] = {}
    k = len(boundary)
    for i, v in enumerate(boundary):
        angle = math.pi / 2 + 2 * math.pi * i / k
        pos[v] = (math.cos(angle), math.sin(angle))

    nbrs = _neighbor_multiset(d)
    interior = [v for v in d.vertices if v not in pos]
    if interior:
        index = {v: i for i, v in enumerate(interior)}
        n = len(interior)
        lap = np.zeros((n, n))
        rhs = np.zeros((n, 2))
        for v in interior:
            i = index[v]
            deg = len(nbrs[v])
            if deg == 0:
                raise PreconditionError(f"interior vertex {v} has no neighbors")
            lap[i, i] = deg
            for w in nbrs[v]:
                if w in index:
                    lap[i, index[w]] -= 1.0
                else:
                    rhs[i] += pos[w]
        try:
            sol = np.linalg.solve(lap, rhs)
        except np.linalg.LinAlgError:
            sol = np.zeros((n, 2))
        for sweep in range(_MAX_RELAX_SWEEPS):
            if _residual(sol, interior, index, nbrs, pos) <= POSITION_TOLERANCE:
                break
            for v in interior:  # Gauss-Seidel sweep
                i = index[v]
                acc = np.zeros(2)
                for w in nbrs[v]:
                    acc += sol[index[w]] if w in index else np.asarray(pos[w])
                sol[i] = acc / len(nbrs[v])
        else:
            raise LayoutError(
                f"residual {_residual(sol, interior, index, nbrs, pos):.3e} above "
                f"{POSITION_TOLERANCE} after {_MAX_RELAX_SWEEPS} sweeps"
            )
        for v in interior:
            pos[v] = (float(sol[index[v], 0]), float(sol[index[v], 1]))
    return pos


def _residual(sol, interior, index, nbrs, pos) -> float:
    worst = 0.0
    for v in interior:
        acc = np.zeros(2)
        for w in nbrs[v]:
            acc += sol[index[w]] if w in index else np.asarray(pos[w])
        worst = max(worst, float(np.max(np.abs(sol[index[v]] - acc / len(nbrs[v])))))
    return worst


# ---------------------------------------------------------------------------
# geometry checks


def _segment_distance(p, q, r, s) -> float:
    """Minimum distance between closed segments pq and rs."""
    p, q, r, s = (np.asarray(x, dtype=float) for x in (p, q, r, s))
    d1 = q - p
    d2 = s - r
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    w = r - p
    if abs(denom) > 1e-15:
        t = (w[0] * d2[1] - w[1] * d2[0]) / denom
        u = (w[0] * d1[1] - w[1] * d1[0]) / denom
        if 0.0 <= t <= 1.0 and 0.0 <= u <= 1.0:
            return 0.0
    best = math.inf
    for a, b, c in ((p, q, r), (p, q, s), (r, s, p), (r, s, q)):
        best = min(best, _point_segment_distance(c, a, b))
    return best


def _point_segment_distance(c, a, b) -> float:
    ab = b - a
    denom = float(ab @ ab)
    t = 0.0 if denom == 0.0 else max(0.0, min(1.0, float((c - a) @ ab) / denom))
    return float(np.linalg.norm(a + t * ab - c))


def geometric_self_check(
    d: CombinatorialDrawing,
    skeleton,
    pos: Mapping[str, tuple[float, float]],
    tolerance: float = CROSSING_TOLERANCE,
) -> list[str]:
    """Warnings for intersections not explained by the crossing records.

    Every recorded crossing meets at its dummy's position by construction,
    so any two skeleton segments without a shared endpoint must stay apart,
    and the four segments at each dummy must alternate between its two
    edges (a transversal crossing, not a touch).
    """
    warnings: list[str] = []
    skel = skeleton.drawing
    segs = [(e, u, v) for e, (u, v) in skel.edges.items()]
    for e, u, v in segs:
        if u == v or math.dist(pos[u], pos[v]) < tolerance:
            warnings.append(f"edge {skeleton.original_edge(e)} renders degenerate")
    for i in range(len(segs)):
        e1, u1, v1 = segs[i]
        for j in range(i + 1, len(segs)):
            e2, u2, v2 = segs[j]
            if {u1, v1} == {u2, v2}:
                warnings.append(
                    f"parallel edges {skeleton.original_edge(e1)} and "
                    f"{skeleton.original_edge(e2)} coincide in a straight-line rendering"
                )
                continue
            if {u1, v1} & {u2, v2}:
                continue
            dist = _segment_distance(pos[u1], pos[v1], pos[u2], pos[v2])
            if dist < tolerance:
                a, b = skeleton.original_edge(e1), skeleton.original_edge(e2)
                warnings.append(
                    f"unrecorded intersection between {a} and {b} (distance {dist:.2e})"
                )
    for z in sorted(skeleton.dummies, key=ident_key):
        angles = []
        ok = True
        for h in skel.rotations[z]:
            w = skel.edges[h.edge][1 - h.end]
            dx = pos[w][0] - pos[z][0]
            dy = pos[w][1] - pos[z][1]
            if math.hypot(dx, dy) < tolerance:
                warnings.append(f"degenerate segment at crossing {skeleton.dummies[z].token()}")
                ok = False
                break
            angles.append((math.atan2(dy, dx), skeleton.original_edge(h.edge)))
        if not ok:
            continue
        order = [edge for _a, edge in sorted(angles)]
        if order[0] == order[1] or order[1] == order[2] or order[2] == order[3] or order[3] == order[0]:
            warnings.append(
                f"crossing {skeleton.dummies[z].token()} is not transversal in the layout"
            )
    return warnings


# ---------------------------------------------------------------------------
# SVG output


def default_outer_region(regions: Sequence[Region]) -> Region:
    # biggest walk outside; prefer all-vertex corners, then canonical order
    return min(regions, key=lambda r: (-r.degree, not r.uncrossed, r.sort_key()))


def render_svg(
    d: CombinatorialDrawing,
    outer_region: Optional[Region | int] = None,
    size: int = 480,
) -> str:
    """Straight-line SVG of the drawing; returns the SVG text.

    ``outer_region`` picks which region opens to the outside, either as a
    Region of this drawing or an index into the canonical region order.
    Self-check failures become ``warning`` annotations in the file.
    """
    skeleton = planarize(d)
    regions = _regions_unchecked(d)
    if outer_region is None:
        outer = default_outer_region(regions)
    elif isinstance(outer_region, int):
        if not 0 <= outer_region < len(regions):
            raise PreconditionError(f"region index {outer_region} out of range 0..{len(regions) - 1}")
        outer = regions[outer_region]
    else:
        if outer_region.darts not in {r.darts for r in regions}:
            raise PreconditionError("outer_region is not a region of this drawing")
        outer = outer_region

    boundary = [v for v, _i in outer.darts]
    pos = barycentric_layout(skeleton.drawing, boundary)
    warnings = geometric_self_check(d, skeleton, pos)

    margin = 0.08 * size
    scale = (size - 2 * margin) / 2.0

    def xy(v: str) -> tuple[float, float]:
        px, py = pos[v]
        return (margin + scale * (px + 1.0), margin + scale * (1.0 - py))

    crossed = d.crossed_edges()
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<desc>1-planar drawing: n={d.n} m={d.m} x={d.x}</desc>",
    ]
    for w in warnings:
        lines.append(f"<!-- warning: {w} -->")

    for e, (u, v) in d.edges.items():
        if e in crossed:
            z = next(z for z, rec in skeleton.dummies.items() if e in rec.edges())
            (x1, y1), (x2, y2), (x3, y3) = xy(u), xy(z), xy(v)
            lines.append(
                f'<polyline class="edge crossed" data-edge="{e}" fill="none" '
                f'stroke="#c0392b" stroke-width="1.2" '
                f'points="{x1:.2f},{y1:.2f} {x2:.2f},{y2:.2f} {x3:.2f},{y3:.2f}"/>'
            )
        else:
            (x1, y1), (x2, y2) = xy(u), xy(v)
            lines.append(
                f'<line class="edge" data-edge="{e}" stroke="#2c3e50" stroke-width="1.2" '
                f'x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>'
            )
    for z in sorted(skeleton.dummies, key=ident_key):
        x, y = xy(z)
        lines.append(
            f'<circle class="crossing" cx="{x:.2f}" cy="{y:.2f}" r="2.2" '
            f'fill="none" stroke="#c0392b" stroke-width="1"/>'
        )
    for v in d.vertices:
        x, y = xy(v)
        lines.append(
            f'<circle class="vertex" cx="{x:.2f}" cy="{y:.2f}" r="3.4" fill="#2c3e50"/>'
        )
        lines.append(
            f'<text class="label" x="{x + 4:.2f}" y="{y - 4:.2f}" font-size="9" '
            f'font-family="sans-serif">{v}</text>'
        )
    for i, w in enumerate(warnings):
        lines.append(
            f'<text class="warning" x="{margin:.0f}" y="{12 + 12 * i}" '
            f'font-size="10" fill="#c0392b">warning: {w}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
