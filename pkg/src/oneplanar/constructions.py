"""Fixture drawings and generators.

Fixtures are assembled from explicit face lists of sphere maps: the faces
are oriented coherently (each edge traversed once in each direction), the
rotation system is read off the oriented corners, and crossings are encoded
by building the face list of the planarized skeleton with placeholder
nodes for the crossing points.

The 24-vertex minimum-degree-7 fixture comes from a polyhedron with 18
square and 8 triangular faces in which every vertex meets one triangle and
three squares (degree 4).  Drawing both diagonals inside every square adds
one crossing per square and raises every degree from 4 to 7, which yields
exactly the census (n, m, x, t, n7) = (24, 84, 18, 8, 24).
"""

from __future__ import annotations

import random
import re
from collections import defaultdict, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .core import (
    CombinatorialDrawing,
    CrossingRecord,
    HalfEdge,
    PreconditionError,
    Region,
    VertexCorner,
    ident_key,
    validate,
    _regions_unchecked,
)
from .triangulation import insert_edge_in_region, _admissible_pairs

Face = tuple[str, ...]


# ---------------------------------------------------------------------------
# faces -> rotation system


def _face_edges(face: Face) -> Iterator[tuple[str, str]]:
    for i, u in enumerate(face):
        yield u, face[(i + 1) % len(face)]


def _orient_faces(faces: Sequence[Face]) -> list[Face]:
    """Flip faces until every edge is traversed once in each direction."""
    occurrences: dict[frozenset, list[tuple[int, tuple[str, str]]]] = defaultdict(list)
    for fi, face in enumerate(faces):
        for u, v in _face_edges(face):
            occurrences[frozenset((u, v))].append((fi, (u, v)))
    for key, occ in occurrences.items():
        if len(occ) != 2:
            raise ValueError(f"edge {set(key)} lies on {len(occ)} faces, expected 2")

    flipped: dict[int, bool] = {0: False}
    todo = deque([0])
    while todo:
        fi = todo.popleft()
        for u, v in _face_edges(faces[fi]):
            (f1, d1), (f2, d2) = occurrences[frozenset((u, v))]
            other, same_dir = (f2, d1 == d2) if f1 == fi else (f1, d1 == d2)
            want = flipped[fi] ^ same_dir
            if other not in flipped:
                flipped[other] = want
                todo.append(other)
            elif flipped[other] != want:
                raise ValueError("face set admits no coherent orientation")
    if len(flipped) != len(faces):
        raise ValueError("face adjacency is not connected")
    return [tuple(reversed(f)) if flipped[i] else f for i, f in enumerate(faces)]


def _rotations_from_faces(faces: Sequence[Face]) -> dict[str, list[str]]:
    """Neighbor cycles of the map whose faces are given (simple maps only)."""
    oriented = _orient_faces(faces)
    succ: dict[str, dict[str, str]] = defaultdict(dict)
    for face in oriented:
        k = len(face)
        for i in range(k):
            prev_v, v, next_v = face[i - 1], face[i], face[(i + 1) % k]
            if prev_v in succ[v]:
                raise ValueError(f"vertex {v} repeats around a face; not supported here")
            succ[v][prev_v] = next_v
    rotations: dict[str, list[str]] = {}
    for v, s in succ.items():
        start = min(s, key=ident_key)
        cycle = [start]
        while True:
            nxt = s[cycle[-1]]
            if nxt == start:
                break
            cycle.append(nxt)
        if len(cycle) != len(s):
            raise ValueError(f"rotation at {v} splits into several cycles")
        rotations[v] = cycle
    return rotations


def _pair_id(u: str, v: str) -> str:
    a, b = sorted((u, v), key=ident_key)
    return f"{a}-{b}"


def drawing_from_faces(faces: Sequence[Face], mode: str = "simple") -> CombinatorialDrawing:
    """Planar drawing (no crossings) of the sphere map with the given faces."""
    rotations_by_vertex = _rotations_from_faces(faces)
    edges: dict[str, tuple[str, str]] = {}
    for face in faces:
        for u, v in _face_edges(face):
            a, b = sorted((u, v), key=ident_key)
            edges[_pair_id(a, b)] = (a, b)
    rotations = {
        v: [HalfEdge(_pair_id(v, w), 0 if v == edges[_pair_id(v, w)][0] else 1) for w in cycle]
        for v, cycle in rotations_by_vertex.items()
    }
    return CombinatorialDrawing(rotations_by_vertex.keys(), edges, rotations, (), mode=mode)


_CROSS_TOKEN = re.compile(r"^@\d+$")


def drawing_with_crossings(
    skeleton_faces: Sequence[Face],
    crossing_edges: Mapping[str, tuple[tuple[str, str], tuple[str, str]]],
) -> CombinatorialDrawing:
    """Drawing built from the face list of its planarized skeleton.

    ``skeleton_faces`` may contain placeholder nodes ``@0``, ``@1``, ... for
    the crossing points; ``crossing_edges`` maps each placeholder to the two
    edges (as endpoint pairs) that cross there.
    """
    rotations_by_node = _rotations_from_faces(skeleton_faces)

    edges: dict[str, tuple[str, str]] = {}
    edge_of_pair: dict[frozenset, str] = {}

    def declare(u: str, v: str) -> str:
        eid = _pair_id(u, v)
        a, b = sorted((u, v), key=ident_key)
        edges[eid] = (a, b)
        edge_of_pair[frozenset((a, b))] = eid
        return eid

    crossing_of_node: dict[str, tuple[str, str]] = {}
    for token, (pair_e, pair_f) in crossing_edges.items():
        if not _CROSS_TOKEN.match(token):
            raise ValueError(f"crossing placeholder {token!r} must look like '@0'")
        if set(pair_e) & set(pair_f):
            raise ValueError(f"crossing edges {pair_e} and {pair_f} share an endpoint")
        crossing_of_node[token] = (declare(*pair_e), declare(*pair_f))

    for node, cycle in rotations_by_node.items():
        if node in crossing_of_node:
            continue
        for w in cycle:
            if w not in crossing_of_node:
                key = frozenset((node, w))
                if key not in edge_of_pair:
                    declare(node, w)

    def half_toward(eid: str, endpoint: str) -> HalfEdge:
        u, v = edges[eid]
        if endpoint == u:
            return HalfEdge(eid, 0)
        if endpoint == v:
            return HalfEdge(eid, 1)
        raise ValueError(f"{endpoint} is not an endpoint of {eid}")

    def edge_at_crossing(token: str, real_endpoint: str) -> str:
        e, f = crossing_of_node[token]
        if real_endpoint in edges[e]:
            return e
        if real_endpoint in edges[f]:
            return f
        raise ValueError(f"{real_endpoint} is no endpoint of the edges crossing at {token}")

    rotations: dict[str, list[HalfEdge]] = {}
    for node, cycle in rotations_by_node.items():
        if node in crossing_of_node:
            continue
        rot = []
        for w in cycle:
            if w in crossing_of_node:
                rot.append(half_toward(edge_at_crossing(w, node), node))
            else:
                rot.append(half_toward(edge_of_pair[frozenset((node, w))], node))
        rotations[node] = rot

    crossings = []
    for token in crossing_of_node:
        p0, p1, p2, p3 = rotations_by_node[token]
        e0 = edge_at_crossing(token, p0)
        e1 = edge_at_crossing(token, p1)
        if {e0, e1} != set(crossing_of_node[token]) or edge_at_crossing(token, p2) != e0:
            raise ValueError(f"segments around {token} do not alternate between its two edges")
        crossings.append(CrossingRecord(half_toward(e0, p0), half_toward(e1, p1)))

    vertices = [v for v in rotations_by_node if v not in crossing_of_node]
    return CombinatorialDrawing(vertices, edges, rotations, crossings, mode="simple")


def cross_quad_faces(
    plain_faces: Sequence[Face], quad_faces: Sequence[Face]
) -> CombinatorialDrawing:
    """Add both diagonals, crossing each other, inside every listed quad face."""
    skeleton_faces: list[Face] = list(plain_faces)
    crossing_edges: dict[str, tuple[tuple[str, str], tuple[str, str]]] = {}
    for i, quad in enumerate(quad_faces):
        if len(quad) != 4 or len(set(quad)) != 4:
            raise ValueError(f"not a quad of distinct vertices: {quad}")
        a, b, c, d = quad
        token = f"@{i}"
        skeleton_faces += [(a, b, token), (b, c, token), (c, d, token), (d, a, token)]
        crossing_edges[token] = ((a, c), (b, d))
    return drawing_with_crossings(skeleton_faces, crossing_edges)


# ---------------------------------------------------------------------------
# fixture library


def _square_ring_polyhedron_faces() -> tuple[list[Face], list[Face]]:
    """Faces of the 24-vertex polyhedron with vertex figure 3.4.4.4.

    Four rings: a top square t0..t3, two octagons u0..u7 and l0..l7, and a
    bottom square b0..b3.  Returns (triangles, squares).
    """
    t = [f"t{i}" for i in range(4)]
    u = [f"u{i}" for i in range(8)]
    l = [f"l{i}" for i in range(8)]
    b = [f"b{i}" for i in range(4)]
    triangles: list[Face] = []
    squares: list[Face] = [tuple(t)]
    for i in range(4):
        triangles.append((t[i], u[2 * i], u[2 * i + 1]))
        squares.append((t[i], u[2 * i + 1], u[(2 * i + 2) % 8], t[(i + 1) % 4]))
    for j in range(8):
        squares.append((u[j], u[(j + 1) % 8], l[(j + 1) % 8], l[j]))
    for i in range(4):
        triangles.append((b[i], l[(2 * i + 1) % 8], l[(2 * i + 2) % 8]))
        squares.append((b[i], l[(2 * i + 2) % 8], l[(2 * i + 3) % 8], b[(i + 1) % 4]))
    squares.append(tuple(b))
    return triangles, squares


def _fig1() -> CombinatorialDrawing:
    triangles, squares = _square_ring_polyhedron_faces()
    return cross_quad_faces(triangles, squares)


def _octahedron_faces(prefix: str) -> list[Face]:
    v = [f"{prefix}{i}" for i in range(6)]
    return [
        (v[0], v[1], v[2]),
        (v[0], v[2], v[3]),
        (v[0], v[3], v[4]),
        (v[0], v[4], v[1]),
        (v[5], v[2], v[1]),
        (v[5], v[3], v[2]),
        (v[5], v[4], v[3]),
        (v[5], v[1], v[4]),
    ]


def _octahedron() -> CombinatorialDrawing:
    return drawing_from_faces(_octahedron_faces("o"))


def _k6() -> CombinatorialDrawing:
    """K6 drawn as the octahedron plus the three missing antipodal edges.

    Each antipodal edge runs through two adjacent triangles, crossing their
    shared edge; the three routes use six distinct faces, so no two added
    edges cross each other and each original edge is crossed at most once.
    """
    skeleton_faces: list[Face] = [
        # untouched octahedron faces
        ("v0", "v1", "v2"),
        ("v5", "v4", "v3"),
        # (v1,v3) crosses (v5,v2) at @0
        ("v1", "v5", "@0"),
        ("v1", "@0", "v2"),
        ("v5", "v3", "@0"),
        ("v3", "v2", "@0"),
        # (v2,v4) crosses (v0,v3) at @1
        ("v0", "v2", "@1"),
        ("v2", "v3", "@1"),
        ("@1", "v3", "v4"),
        ("@1", "v4", "v0"),
        # (v0,v5) crosses (v1,v4) at @2
        ("v0", "v4", "@2"),
        ("v0", "@2", "v1"),
        ("v5", "v1", "@2"),
        ("v5", "@2", "v4"),
    ]
    crossing_edges = {
        "@0": (("v1", "v3"), ("v5", "v2")),
        "@1": (("v2", "v4"), ("v0", "v3")),
        "@2": (("v0", "v5"), ("v1", "v4")),
    }
    return drawing_with_crossings(skeleton_faces, crossing_edges)


def _k4_planar() -> CombinatorialDrawing:
    return drawing_from_faces(
        [("a", "b", "c"), ("a", "c", "d"), ("a", "d", "b"), ("b", "d", "c")]
    )


def _k4_crossed() -> CombinatorialDrawing:
    """K4 drawn as a square with both diagonals crossing once inside."""
    return cross_quad_faces([("a", "b", "c", "d")], [("a", "b", "c", "d")])


def _c4() -> CombinatorialDrawing:
    cycle = ("v1", "v2", "v3", "v4")
    return drawing_from_faces([cycle, cycle])


def _k3() -> CombinatorialDrawing:
    return drawing_from_faces([("v0", "v1", "v2"), ("v0", "v2", "v1")])


# ---------------------------------------------------------------------------
# vertex insertion (used by the stacked and randomized generators)


def insert_vertex_in_region(
    d: CombinatorialDrawing,
    region: Region,
    corner_positions: Sequence[int],
    new_vertex: str,
) -> CombinatorialDrawing:
    """Place a new vertex inside a region, joined to the chosen corners.

    ``corner_positions`` are positions on the region walk; each must be a
    vertex corner.  The new vertex's rotation lists the chosen corners in
    reverse walk order, which is what keeps the enlarged rotation system a
    sphere map.
    """
    if new_vertex in d.rotations:
        raise PreconditionError(f"vertex {new_vertex} already exists")
    positions = list(corner_positions)
    if len(set(positions)) != len(positions) or not positions:
        raise PreconditionError("corner positions must be distinct and non-empty")
    for p in positions:
        if not 0 <= p < region.degree:
            raise PreconditionError(f"corner {p} not on region of degree {region.degree}")
        if not isinstance(region.corners[p], VertexCorner):
            raise PreconditionError(f"corner {p} is a crossing, not a vertex")
    positions.sort()

    used = set(d.edges)
    new_edges: dict[str, tuple[str, str]] = {}
    halves_at_anchor: dict[int, HalfEdge] = {}
    spokes: list[HalfEdge] = []
    for p in positions:
        v = region.corners[p].vertex
        eid = _pair_id(new_vertex, v)
        k = 0
        while eid in used or eid in new_edges:
            k += 1
            eid = f"{_pair_id(new_vertex, v)}+{k}"
        new_edges[eid] = (new_vertex, v)
        halves_at_anchor[p] = HalfEdge(eid, 1)
        spokes.append(HalfEdge(eid, 0))

    edges = dict(d.edges)
    edges.update(new_edges)
    rotations = {v: list(rot) for v, rot in d.rotations.items()}
    by_vertex: dict[str, list[int]] = defaultdict(list)
    for p in positions:
        by_vertex[region.corners[p].vertex].append(p)
    for v, plist in by_vertex.items():
        for p in sorted(plist, key=lambda p: region.darts[p][1], reverse=True):
            rotations[v].insert(region.darts[p][1], halves_at_anchor[p])
    rotations[new_vertex] = list(reversed(spokes))

    mode = d.mode
    anchors = [region.corners[p].vertex for p in positions]
    if len(set(anchors)) != len(anchors):
        mode = "multigraph"
    vertices = list(d.vertices) + [new_vertex]
    return CombinatorialDrawing(vertices, edges, rotations, d.crossings, mode=mode)


def stacked_triangulation(depth: int) -> CombinatorialDrawing:
    """Planar triangulation on 3 + depth vertices grown by repeated stacking.

    Starting from a triangle, each step puts a new vertex inside the first
    region (in canonical order) and joins it to the region's three corners.
    """
    if depth < 0:
        raise PreconditionError("depth must be >= 0")
    d = _k3()
    for step in range(depth):
        region = _regions_unchecked(d)[0]
        d = insert_vertex_in_region(d, region, (0, 1, 2), f"v{3 + step}")
    return d


# ---------------------------------------------------------------------------
# glued families


@dataclass(frozen=True)
class GlueSpec:
    """k copies of a base drawing identified at one shared hub vertex."""

    base: CombinatorialDrawing
    hub: str
    copies: int

    def __post_init__(self):
        if self.copies < 1:
            raise PreconditionError("need at least one copy")
        if self.hub not in self.base.rotations:
            raise PreconditionError(f"hub {self.hub!r} is not a vertex of the base")
        if self.base.mode != "simple":
            raise PreconditionError("glue construction requires a simple base drawing")


def glue_copies(spec: GlueSpec) -> CombinatorialDrawing:
    """Join disjoint copies of the base at the hub.

    The hub's rotation is the concatenation of the copies' hub rotations,
    so the copies occupy disjoint angular sectors around the hub and no new
    crossings arise.  The result has k*(n-1)+1 vertices and k*m edges.
    """
    validate(spec.base).raise_if_rejected()
    base, k = spec.base, spec.copies

    def vmap(i: int, v: str) -> str:
        return "hub" if v == spec.hub else f"c{i}_{v}"

    def hmap(i: int, h: HalfEdge) -> HalfEdge:
        return HalfEdge(f"c{i}_{h.edge}", h.end)

    vertices: list[str] = ["hub"]
    edges: dict[str, tuple[str, str]] = {}
    rotations: dict[str, list[HalfEdge]] = {"hub": []}
    crossings: list[CrossingRecord] = []
    for i in range(k):
        for v in base.vertices:
            if v != spec.hub:
                vertices.append(vmap(i, v))
        for e, (u, v) in base.edges.items():
            edges[f"c{i}_{e}"] = (vmap(i, u), vmap(i, v))
        for v, rot in base.rotations.items():
            mapped = [hmap(i, h) for h in rot]
            if v == spec.hub:
                rotations["hub"].extend(mapped)
            else:
                rotations[vmap(i, v)] = mapped
        for c in base.crossings:
            crossings.append(CrossingRecord(hmap(i, c.first), hmap(i, c.second)))
    return CombinatorialDrawing(vertices, edges, rotations, crossings, mode="simple")


def glued_family(k: int, base: CombinatorialDrawing | None = None, hub: str | None = None) -> CombinatorialDrawing:
    """Glue k copies of the 24-vertex fixture (or a custom base) at a hub."""
    if base is None:
        base = fixture("fig1")
    if hub is None:
        hub = min(base.vertices, key=ident_key)
    return glue_copies(GlueSpec(base, hub, k))


# ---------------------------------------------------------------------------
# randomized corpus drawings


def random_insertion_variant(seed: int) -> CombinatorialDrawing:
    """Small random drawing grown from a fixture by seeded insertions.

    Each step either inserts a chord between two admissible corners of a
    random region or stacks a new vertex into one; both operations keep the
    drawing valid, so the variants exercise triangulation and the counting
    identities on inputs with and without crossings.
    """
    rng = random.Random(seed)
    d = fixture(rng.choice(["k4_planar", "c4", "octahedron", "k6", "k4_crossed"]))
    fresh = 0
    for _ in range(rng.randint(3, 8)):
        regions = _regions_unchecked(d)
        region = regions[rng.randrange(len(regions))]
        vertex_positions = [
            i for i, c in enumerate(region.corners) if isinstance(c, VertexCorner)
        ]
        distinct: dict[str, int] = {}
        for p in vertex_positions:
            distinct.setdefault(region.corners[p].vertex, p)
        chord_pairs = [
            (a, b)
            for a, b in _admissible_pairs(region)
            if region.corners[a].vertex != region.corners[b].vertex
        ]
        if chord_pairs and rng.random() < 0.5:
            a, b = chord_pairs[rng.randrange(len(chord_pairs))]
            d = insert_edge_in_region(d, region, a, b)
        elif len(distinct) >= 2:
            count = rng.randint(2, min(3, len(distinct)))
            chosen = rng.sample(sorted(distinct, key=ident_key), count)
            positions = sorted(distinct[v] for v in chosen)
            d = insert_vertex_in_region(d, region, positions, f"w{fresh}")
            fresh += 1
    return d


# ---------------------------------------------------------------------------
# registry


_STACKED = re.compile(r"^stacked\((\d+)\)$")

FIXTURE_NAMES = ("fig1", "k4_planar", "k4_crossed", "k6", "c4", "octahedron")


@lru_cache(maxsize=None)
def _fixture_cached(name: str) -> CombinatorialDrawing:
    builders = {
        "fig1": _fig1,
        "k4_planar": _k4_planar,
        "k4_crossed": _k4_crossed,
        "k6": _k6,
        "c4": _c4,
        "octahedron": _octahedron,
    }
    if name in builders:
        return builders[name]()
    m = _STACKED.match(name)
    if m:
        return stacked_triangulation(int(m.group(1)))
    raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}, stacked(N)")


def fixture(name: str) -> CombinatorialDrawing:
    """Named fixture drawing; ``stacked(N)`` is accepted for any N >= 0."""
    return _fixture_cached(name)
