"""Edge insertion until every region has exactly three corners.

Any region of degree 4 or more contains two non-consecutive corners that
are both vertices (no two crossing corners are ever adjacent on a walk),
so an uncrossed chord can always be drawn inside it.  Each insertion
splits one region into two whose degrees sum to the old degree plus two,
so the potential sum of (degree - 3) over all regions drops by exactly one
per step and the procedure terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .core import (
    CombinatorialDrawing,
    HalfEdge,
    IntegrityError,
    PreconditionError,
    Region,
    VertexCorner,
    validate,
    _regions_unchecked,
)


@dataclass(frozen=True)
class InsertionStep:
    """Audit record for one chord inserted during triangulation."""

    region_walk: tuple[str, ...]
    corner_a: int
    corner_b: int
    vertex_a: str
    vertex_b: str
    new_edge: str


class TriangulationResult(NamedTuple):
    drawing: CombinatorialDrawing
    steps: tuple[InsertionStep, ...]


def is_triangulated(d: CombinatorialDrawing) -> bool:
    """True iff every region of the drawing has exactly three corners."""
    validate(d).raise_if_rejected()
    return all(r.degree == 3 for r in _regions_unchecked(d))


def region_potential(d: CombinatorialDrawing) -> int:
    """Sum of (degree - 3) over all regions; zero exactly at triangulation."""
    return sum(r.degree - 3 for r in _regions_unchecked(d))


def _fresh_edge_id(d: CombinatorialDrawing, hint: int) -> tuple[str, int]:
    i = hint
    while f"t{i}" in d.edges:
        i += 1
    return f"t{i}", i + 1


def _match_current_region(d: CombinatorialDrawing, region: Region) -> Region:
    for r in _regions_unchecked(d):
        if r.darts == region.darts:
            return r
    raise PreconditionError("region does not belong to this drawing (stale or foreign)")


def insert_edge_in_region(
    d: CombinatorialDrawing,
    region: Region,
    corner_a: int,
    corner_b: int,
    edge_id: str | None = None,
) -> CombinatorialDrawing:
    """Insert an uncrossed edge between two corner incidences of a region.

    ``corner_a`` and ``corner_b`` are positions on the region walk; both
    must be vertex corners and non-consecutive on the walk.  The new edge
    is drawn inside the region: at each chosen corner the new half-edge is
    placed between the two bounding half-edges of the walk.  If both
    corners are incidences of the same vertex the new edge is a loop, which
    forces multigraph mode.
    """
    validate(d).raise_if_rejected()
    region = _match_current_region(d, region)
    deg = region.degree
    for c in (corner_a, corner_b):
        if not 0 <= c < deg:
            raise PreconditionError(f"corner {c} not on region of degree {deg}")
        if not isinstance(region.corners[c], VertexCorner):
            raise PreconditionError(f"corner {c} is a crossing, not a vertex")
    if corner_a == corner_b:
        raise PreconditionError("corners must be two distinct incidences")
    if (corner_a - corner_b) % deg in (1, deg - 1):
        raise PreconditionError(f"corners {corner_a} and {corner_b} are consecutive on the walk")

    va, ia = region.darts[corner_a]
    vb, ib = region.darts[corner_b]
    # darts live on the skeleton, but at a real vertex the skeleton rotation
    # mirrors the drawing rotation index for index
    if edge_id is None:
        edge_id, _ = _fresh_edge_id(d, 0)
    elif edge_id in d.edges:
        raise PreconditionError(f"edge id {edge_id} already in use")

    edges = dict(d.edges)
    edges[edge_id] = (va, vb)
    rotations = {v: list(rot) for v, rot in d.rotations.items()}
    if va == vb:
        first, second = ((ia, 0), (ib, 1)) if ia >= ib else ((ib, 1), (ia, 0))
        rotations[va].insert(first[0], HalfEdge(edge_id, first[1]))
        rotations[va].insert(second[0], HalfEdge(edge_id, second[1]))
    else:
        rotations[va].insert(ia, HalfEdge(edge_id, 0))
        rotations[vb].insert(ib, HalfEdge(edge_id, 1))

    mode = d.mode
    if va == vb or any(
        frozenset(uv) == frozenset((va, vb)) for e, uv in d.edges.items()
    ):
        mode = "multigraph"
    return CombinatorialDrawing(d.vertices, edges, rotations, d.crossings, mode=mode)


def _admissible_pairs(region: Region) -> list[tuple[int, int]]:
    deg = region.degree
    vertex_positions = [
        i for i, c in enumerate(region.corners) if isinstance(c, VertexCorner)
    ]
    pairs = []
    for ai, a in enumerate(vertex_positions):
        for b in vertex_positions[ai + 1 :]:
            if (b - a) % deg not in (1, deg - 1):
                pairs.append((a, b))
    return pairs


def triangulate(d: CombinatorialDrawing) -> TriangulationResult:
    """Insert uncrossed edges until the drawing is triangulated.

    Returns the triangulated drawing plus the audit trail of insertions.
    The input is a sub-drawing of the output; if any edge was added the
    output is in multigraph mode (the result need not be simple).  Choices
    are deterministic: regions are scanned in canonical order and the
    lexicographically smallest admissible corner pair is used, preferring
    pairs of distinct vertices over loops.
    """
    validate(d).raise_if_rejected()
    current = d
    steps: list[InsertionStep] = []
    id_hint = 0
    potential = region_potential(current)
    while True:
        regions = _regions_unchecked(current)
        too_small = [r for r in regions if r.degree < 3]
        if too_small:
            raise PreconditionError(
                f"region {too_small[0].corner_tokens()} has degree {too_small[0].degree} < 3; "
                "cannot triangulate"
            )
        big = [r for r in regions if r.degree > 3]
        if not big:
            break
        region = big[0]
        pairs = _admissible_pairs(region)
        if not pairs:  # impossible for degree >= 4 in an accepted drawing
            raise PreconditionError(
                f"no admissible corner pair in region {region.corner_tokens()}"
            )
        distinct = [
            (a, b)
            for a, b in pairs
            if region.corners[a].vertex != region.corners[b].vertex
        ]
        a, b = min(distinct) if distinct else min(pairs)
        edge_id, id_hint = _fresh_edge_id(current, id_hint)
        current = insert_edge_in_region(current, region, a, b, edge_id=edge_id)
        steps.append(
            InsertionStep(
                region_walk=region.corner_tokens(),
                corner_a=a,
                corner_b=b,
                vertex_a=region.corners[a].vertex,
                vertex_b=region.corners[b].vertex,
                new_edge=edge_id,
            )
        )
        new_potential = region_potential(current)
        if new_potential != potential - 1:
            raise IntegrityError(
                f"insertion of {edge_id} changed the region potential "
                f"{potential} -> {new_potential}, expected a drop of 1"
            )
        potential = new_potential
    if steps:
        current = current.replace(mode="multigraph")
    return TriangulationResult(current, tuple(steps))
