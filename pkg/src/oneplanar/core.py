"""Combinatorial model of 1-planar drawings.

A drawing is stored purely combinatorially: vertices, edges, the clockwise
cyclic order of edge-ends around every vertex (the rotation system), and one
record per crossing that fixes how the two edges interleave around the
crossing point.  Everything else (regions, planarization, census counts) is
derived from this data.

All values are immutable after construction; every operation returns new
objects and never mutates its inputs.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Sequence, Union

VertexId = str
EdgeId = str

# identifier order used everywhere canonical output is needed: length first,
# then lexicographic, so v2 < v10 for the usual numbered naming schemes
def ident_key(name: str) -> tuple[int, str]:
    return (len(name), name)


_IDENT_ALLOWED = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_~-")


class StructureError(ValueError):
    """Raised when a drawing references identifiers that do not resolve."""


class PreconditionError(ValueError):
    """Raised when an operation is applied to a drawing it does not accept."""


class IntegrityError(RuntimeError):
    """Raised when a mathematically guaranteed invariant fails.

    Seeing this exception means either the input drawing is corrupt in a way
    validation did not catch, or there is a bug in the toolkit itself.
    """


@dataclass(frozen=True, order=True)
class HalfEdge:
    """One of the two ends of an edge; ``end`` selects the endpoint record."""

    edge: EdgeId
    end: int  # 0 = first endpoint of the edge record, 1 = second

    def opposite(self) -> "HalfEdge":
        return HalfEdge(self.edge, 1 - self.end)

    def token(self) -> str:
        return f"{self.edge}.{self.end}"


@dataclass(frozen=True)
class CrossingRecord:
    """A crossing of two edges.

    Clockwise around the crossing point the four segment-ends appear as
    (first, second, opposite of first, opposite of second), where each
    half-edge names the segment heading toward that endpoint.  The
    interleaving must be stored explicitly: the rotations of the four
    endpoints alone do not determine it.
    """

    first: HalfEdge
    second: HalfEdge

    def edges(self) -> tuple[EdgeId, EdgeId]:
        return (self.first.edge, self.second.edge)

    def corner_cycle(self) -> tuple[HalfEdge, HalfEdge, HalfEdge, HalfEdge]:
        return (self.first, self.second, self.first.opposite(), self.second.opposite())

    def canonical(self) -> "CrossingRecord":
        """Equivalent record whose ``first`` is the smallest half-edge.

        The four cyclic shifts of the corner cycle describe the same
        crossing; this picks a unique representative.
        """
        cycle = self.corner_cycle()
        variants = [CrossingRecord(cycle[i], cycle[(i + 1) % 4]) for i in range(4)]
        return min(variants, key=lambda r: (ident_key(r.first.edge), r.first.end))

    def token(self) -> str:
        r = self.canonical()
        return f"x({r.first.token()},{r.second.token()})"


@dataclass(frozen=True)
class VertexCorner:
    vertex: VertexId

    def token(self) -> str:
        return self.vertex


@dataclass(frozen=True)
class CrossingCorner:
    crossing: CrossingRecord

    def token(self) -> str:
        return self.crossing.token()


Corner = Union[VertexCorner, CrossingCorner]

# a dart is one concrete occurrence of a half-edge: (vertex, index into its
# rotation); occurrence-level identity is what makes loops unambiguous
Dart = tuple[VertexId, int]


@dataclass(frozen=True)
class Region:
    """A face of the drawing, as its cyclic corner walk.

    ``corners`` lists corner incidences in boundary-walk order; a vertex can
    contribute several incidences if the walk revisits it.  ``darts`` holds
    the underlying walk on the planarized skeleton (one dart per corner) and
    is what edge-insertion operations consume.
    """

    corners: tuple[Corner, ...]
    darts: tuple[Dart, ...]

    @property
    def degree(self) -> int:
        return len(self.corners)

    @property
    def uncrossed(self) -> bool:
        return all(isinstance(c, VertexCorner) for c in self.corners)

    def corner_tokens(self) -> tuple[str, ...]:
        return tuple(c.token() for c in self.corners)

    def sort_key(self):
        return tuple(ident_key(t) for t in self.corner_tokens()), self.darts


class CombinatorialDrawing:
    """A 1-planar drawing given by rotations and crossing records.

    ``edges`` maps each edge identifier to its (first, second) endpoint pair;
    ``rotations`` maps each vertex to the clockwise cyclic order of incident
    half-edges.  ``mode`` is ``"simple"`` or ``"multigraph"``; loops and
    parallel edges are only legal in multigraph mode.
    """

    __slots__ = ("vertices", "edges", "rotations", "crossings", "mode", "_key")

    def __init__(
        self,
        vertices: Sequence[VertexId],
        edges: Mapping[EdgeId, tuple[VertexId, VertexId]],
        rotations: Mapping[VertexId, Sequence[HalfEdge]],
        crossings: Sequence[CrossingRecord] = (),
        mode: str = "simple",
    ):
        self.vertices: tuple[VertexId, ...] = tuple(sorted(set(vertices), key=ident_key))
        self.edges: dict[EdgeId, tuple[VertexId, VertexId]] = {
            e: (u, v) for e, (u, v) in sorted(edges.items(), key=lambda kv: ident_key(kv[0]))
        }
        rot = {v: tuple(rotations.get(v, ())) for v in self.vertices}
        extra = set(rotations) - set(rot)
        if extra:
            raise StructureError(f"rotation given for undeclared vertex: {sorted(extra)[0]}")
        self.rotations: dict[VertexId, tuple[HalfEdge, ...]] = rot
        self.crossings: tuple[CrossingRecord, ...] = tuple(
            sorted((c.canonical() for c in crossings), key=lambda c: c.token())
        )
        self.mode = mode
        self._key = None
        _check_structure(self)

    # -- basic counts ------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def x(self) -> int:
        return len(self.crossings)

    def degree(self, v: VertexId) -> int:
        # loops contribute both half-edges, hence 2, to their vertex
        return len(self.rotations[v])

    def degrees(self) -> dict[VertexId, int]:
        return {v: len(r) for v, r in self.rotations.items()}

    def min_degree(self) -> int:
        return min(len(r) for r in self.rotations.values()) if self.vertices else 0

    def is_loop(self, e: EdgeId) -> bool:
        u, v = self.edges[e]
        return u == v

    def crossed_edges(self) -> set[EdgeId]:
        out: set[EdgeId] = set()
        for c in self.crossings:
            out.update(c.edges())
        return out

    def endpoint(self, h: HalfEdge) -> VertexId:
        return self.edges[h.edge][h.end]

    # -- equality up to cyclic rotation shifts ------------------------------

    def canonical_key(self):
        if self._key is None:
            rot_key = tuple(
                (v, _canonical_cycle(r)) for v, r in sorted(self.rotations.items(), key=lambda kv: ident_key(kv[0]))
            )
            self._key = (
                self.mode,
                self.vertices,
                tuple(self.edges.items()),
                rot_key,
                self.crossings,
            )
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, CombinatorialDrawing):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def __repr__(self) -> str:
        return (
            f"CombinatorialDrawing(n={self.n}, m={self.m}, x={self.x}, mode={self.mode!r})"
        )

    def replace(self, **kw) -> "CombinatorialDrawing":
        args = dict(
            vertices=self.vertices,
            edges=self.edges,
            rotations=self.rotations,
            crossings=self.crossings,
            mode=self.mode,
        )
        args.update(kw)
        return CombinatorialDrawing(**args)


def _canonical_cycle(rot: tuple[HalfEdge, ...]) -> tuple[HalfEdge, ...]:
    """Rotate a cyclic sequence to start at its smallest half-edge token."""
    if not rot:
        return rot
    start = min(range(len(rot)), key=lambda i: ident_key(rot[i].token()))
    return rot[start:] + rot[:start]


def _check_structure(d: CombinatorialDrawing) -> None:
    for v in d.vertices:
        if not v or not set(v) <= _IDENT_ALLOWED:
            raise StructureError(f"bad vertex identifier: {v!r}")
    for e, (u, v) in d.edges.items():
        if not e or not set(e) <= _IDENT_ALLOWED:
            raise StructureError(f"bad edge identifier: {e!r}")
        for w in (u, v):
            if w not in d.rotations:
                raise StructureError(f"edge {e} references unknown vertex {w!r}")
    for v, rot in d.rotations.items():
        for h in rot:
            if h.edge not in d.edges:
                raise StructureError(f"rotation of {v} references unknown edge {h.edge!r}")
            if h.end not in (0, 1):
                raise StructureError(f"rotation of {v} has bad end marker {h.end!r}")
    for c in d.crossings:
        for h in (c.first, c.second):
            if h.edge not in d.edges:
                raise StructureError(f"crossing references unknown edge {h.edge!r}")
            if h.end not in (0, 1):
                raise StructureError(f"crossing has bad end marker {h.end!r}")
    if d.mode not in ("simple", "multigraph"):
        raise StructureError(f"unknown mode {d.mode!r}")


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def accepted(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}

    def raise_if_rejected(self) -> None:
        if self.violations:
            lines = "; ".join(str(v) for v in self.violations)
            raise PreconditionError(f"drawing rejected by validation: {lines}")


def validate(d: CombinatorialDrawing) -> ValidationReport:
    """Check the good-drawing rules and the sphere-embedding invariant.

    Violations are data, not exceptions: the report lists every problem
    found.  Only unresolvable identifiers raise (StructureError, from the
    drawing constructor).
    """
    out: list[Violation] = []

    if d.n < 3:
        out.append(Violation("too-few-vertices", f"need at least 3 vertices, got {d.n}"))

    if d.mode == "simple":
        seen_pairs: dict[frozenset, EdgeId] = {}
        for e, (u, v) in d.edges.items():
            if u == v:
                out.append(Violation("loop-in-simple-mode", f"edge {e} is a loop at {u}"))
                continue
            pair = frozenset((u, v))
            if pair in seen_pairs:
                out.append(
                    Violation(
                        "parallel-edges-in-simple-mode",
                        f"edges {seen_pairs[pair]} and {e} both join {u} and {v}",
                    )
                )
            else:
                seen_pairs[pair] = e

    rotation_ok = _check_rotations(d, out)
    crossings_ok = _check_crossings(d, out)

    if not _is_connected(d):
        out.append(Violation("disconnected", "underlying graph is not connected"))
    elif rotation_ok and crossings_ok:
        skel = _build_skeleton(d)
        faces = len(_orbits(skel.drawing.rotations))
        euler = (d.n + d.x) - (d.m + 2 * d.x) + faces
        if euler != 2:
            out.append(
                Violation(
                    "euler-characteristic",
                    f"planarization has V'-E'+F' = {euler}, expected 2 "
                    f"(V'={d.n + d.x}, E'={d.m + 2 * d.x}, F'={faces})",
                )
            )

    return ValidationReport(tuple(out))


def _check_rotations(d: CombinatorialDrawing, out: list[Violation]) -> bool:
    ok = True
    counts: Counter[HalfEdge] = Counter()
    placement: dict[HalfEdge, VertexId] = {}
    for v, rot in d.rotations.items():
        for h in rot:
            counts[h] += 1
            placement[h] = v
    for e, (u, v) in d.edges.items():
        for k, w in ((0, u), (1, v)):
            h = HalfEdge(e, k)
            c = counts.get(h, 0)
            if c == 0:
                out.append(
                    Violation("rotation-inconsistency", f"half-edge {h.token()} missing from all rotations")
                )
                ok = False
            elif c > 1:
                out.append(
                    Violation("rotation-inconsistency", f"half-edge {h.token()} appears {c} times")
                )
                ok = False
            elif placement[h] != w:
                out.append(
                    Violation(
                        "rotation-inconsistency",
                        f"half-edge {h.token()} sits at {placement[h]} but belongs to {w}",
                    )
                )
                ok = False
    known = {HalfEdge(e, k) for e in d.edges for k in (0, 1)}
    for h in counts:
        if h not in known:  # unreachable after _check_structure, kept for safety
            out.append(Violation("rotation-inconsistency", f"unknown half-edge {h.token()}"))
            ok = False
    return ok


def _check_crossings(d: CombinatorialDrawing, out: list[Violation]) -> bool:
    ok = True
    per_edge: Counter[EdgeId] = Counter()
    for c in d.crossings:
        e, f = c.edges()
        if e == f:
            out.append(Violation("self-crossing", f"edge {e} is recorded as crossing itself"))
            ok = False
            continue
        per_edge[e] += 1
        per_edge[f] += 1
        eu, ev = d.edges[e]
        fu, fv = d.edges[f]
        shared = {eu, ev} & {fu, fv}
        if shared:
            out.append(
                Violation(
                    "adjacent-edges-cross",
                    f"crossing edges {e} and {f} share endpoint {sorted(shared, key=ident_key)[0]}",
                )
            )
            ok = False
    for e, c in sorted(per_edge.items(), key=lambda kv: ident_key(kv[0])):
        if c > 1:
            out.append(Violation("edge-crossed-twice", f"edge {e} appears in {c} crossings"))
            ok = False
    return ok


def _is_connected(d: CombinatorialDrawing) -> bool:
    if not d.vertices:
        return True
    adj: dict[VertexId, list[VertexId]] = {v: [] for v in d.vertices}
    for u, v in d.edges.values():
        adj[u].append(v)
        adj[v].append(u)
    seen = {d.vertices[0]}
    todo = deque(seen)
    while todo:
        v = todo.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(d.vertices)


# ---------------------------------------------------------------------------
# planarization


def _piece_id(e: EdgeId, k: int) -> EdgeId:
    return f"{e}~{k}"


def _piece_half_at_dummy(e: EdgeId, k: int) -> HalfEdge:
    # piece e~0 runs (u0, z), piece e~1 runs (z, u1); the dummy sits at
    # end 1 of the first and end 0 of the second
    return HalfEdge(_piece_id(e, k), 1 - k)


@dataclass(frozen=True)
class PlanarSkeleton:
    """The drawing with every crossing replaced by a degree-4 dummy vertex.

    ``dummies`` maps each dummy vertex to the crossing it replaces and
    ``piece_to_edge`` maps subdivided edge pieces back to their original
    edges; together they form the back-map.
    """

    drawing: CombinatorialDrawing
    dummies: Mapping[VertexId, CrossingRecord]
    piece_to_edge: Mapping[EdgeId, EdgeId]

    def original_edge(self, skeleton_edge: EdgeId) -> EdgeId:
        return self.piece_to_edge.get(skeleton_edge, skeleton_edge)

    def is_dummy(self, v: VertexId) -> bool:
        return v in self.dummies

    def restore(self) -> CombinatorialDrawing:
        """Undo the planarization; inverse of :func:`planarize`."""
        if not self.dummies:
            return self.drawing
        skel = self.drawing
        crossed: dict[EdgeId, tuple[VertexId, VertexId]] = {}
        for z, rec in self.dummies.items():
            for h in (rec.first, rec.second):
                e = h.edge
                u0 = skel.edges[_piece_id(e, 0)][0]
                u1 = skel.edges[_piece_id(e, 1)][1]
                crossed[e] = (u0, u1)
        edges = {e: uv for e, uv in skel.edges.items() if e not in self.piece_to_edge}
        edges.update(crossed)
        rotations = {}
        for v in skel.vertices:
            if v in self.dummies:
                continue
            rotations[v] = tuple(
                HalfEdge(self.piece_to_edge[h.edge], h.end) if h.edge in self.piece_to_edge else h
                for h in skel.rotations[v]
            )
        vertices = [v for v in skel.vertices if v not in self.dummies]
        return CombinatorialDrawing(
            vertices, edges, rotations, self.dummies.values(), mode=skel.mode
        )


def _build_skeleton(d: CombinatorialDrawing) -> PlanarSkeleton:
    if d.x == 0:
        return PlanarSkeleton(d, {}, {})

    dummies: dict[VertexId, CrossingRecord] = {}
    dummy_of: dict[CrossingRecord, VertexId] = {}
    for i, rec in enumerate(d.crossings):  # crossings are canonically sorted
        z = f"x~{i}"
        dummies[z] = rec
        dummy_of[rec] = z

    crossed = d.crossed_edges()
    edges: dict[EdgeId, tuple[VertexId, VertexId]] = {}
    piece_to_edge: dict[EdgeId, EdgeId] = {}
    for e, (u, v) in d.edges.items():
        if e in crossed:
            rec = next(c for c in d.crossings if e in c.edges())
            z = dummy_of[rec]
            edges[_piece_id(e, 0)] = (u, z)
            edges[_piece_id(e, 1)] = (z, v)
            piece_to_edge[_piece_id(e, 0)] = e
            piece_to_edge[_piece_id(e, 1)] = e
        else:
            edges[e] = (u, v)

    rotations: dict[VertexId, Sequence[HalfEdge]] = {}
    for v in d.vertices:
        rotations[v] = tuple(
            HalfEdge(_piece_id(h.edge, h.end), h.end) if h.edge in crossed else h
            for h in d.rotations[v]
        )
    for z, rec in dummies.items():
        rotations[z] = tuple(
            _piece_half_at_dummy(h.edge, h.end) for h in rec.corner_cycle()
        )

    vertices = list(d.vertices) + list(dummies)
    skel = CombinatorialDrawing(vertices, edges, rotations, (), mode=d.mode)
    return PlanarSkeleton(skel, dummies, piece_to_edge)


def planarize(d: CombinatorialDrawing) -> PlanarSkeleton:
    """Replace every crossing by a degree-4 dummy vertex.

    The dummy's rotation is exactly the crossing record's clockwise
    four-sequence, so the skeleton embeds on the sphere iff the drawing
    does.
    """
    validate(d).raise_if_rejected()
    return _build_skeleton(d)


# ---------------------------------------------------------------------------
# face traversal


def _occurrences(rotations: Mapping[VertexId, tuple[HalfEdge, ...]]) -> dict[HalfEdge, Dart]:
    occ: dict[HalfEdge, Dart] = {}
    for v, rot in rotations.items():
        for i, h in enumerate(rot):
            if h in occ:
                raise IntegrityError(f"half-edge {h.token()} occurs twice; validate first")
            occ[h] = (v, i)
    return occ


def _orbits(rotations: Mapping[VertexId, tuple[HalfEdge, ...]]) -> list[list[Dart]]:
    """Face orbits of a rotation system.

    A dart (v, i) stands for the half-edge rotations[v][i] leaving v; the
    next dart of its face is the rotation successor of the dart's twin.
    Faces come out in a deterministic canonical order.
    """
    occ = _occurrences(rotations)
    darts: list[Dart] = sorted(
        ((v, i) for v, rot in rotations.items() for i in range(len(rot))),
        key=lambda vi: (ident_key(vi[0]), vi[1]),
    )
    seen: set[Dart] = set()
    orbits: list[list[Dart]] = []
    for start in darts:
        if start in seen:
            continue
        orbit: list[Dart] = []
        cur = start
        while True:
            orbit.append(cur)
            seen.add(cur)
            v, i = cur
            twin_v, twin_i = occ[rotations[v][i].opposite()]
            nxt_i = (twin_i + 1) % len(rotations[twin_v])
            cur = (twin_v, nxt_i)
            if cur == start:
                break
        # canonical starting dart inside the orbit
        k = min(range(len(orbit)), key=lambda j: (ident_key(orbit[j][0]), orbit[j][1]))
        orbits.append(orbit[k:] + orbit[:k])
    return orbits


def enumerate_regions(d: CombinatorialDrawing) -> tuple[Region, ...]:
    """All regions of the drawing, as corner walks in canonical order.

    Regions are the face orbits of the planarized rotation system; dummy
    corners are reported as crossing references.
    """
    validate(d).raise_if_rejected()
    return _regions_unchecked(d)


def _regions_unchecked(d: CombinatorialDrawing) -> tuple[Region, ...]:
    skel = _build_skeleton(d)
    regions = []
    for orbit in _orbits(skel.drawing.rotations):
        corners: list[Corner] = []
        for v, _i in orbit:
            if skel.is_dummy(v):
                corners.append(CrossingCorner(skel.dummies[v]))
            else:
                corners.append(VertexCorner(v))
        regions.append(Region(tuple(corners), tuple(orbit)))
    regions.sort(key=lambda r: r.sort_key())
    return tuple(regions)


# ---------------------------------------------------------------------------
# derived drawings


def underlying_graph(d: CombinatorialDrawing):
    """Abstract simple graph under the drawing: loops dropped, parallels collapsed."""
    from .matching import UndirectedSimpleGraph

    pairs = {(min(u, v, key=ident_key), max(u, v, key=ident_key)) for u, v in d.edges.values() if u != v}
    return UndirectedSimpleGraph(frozenset(d.vertices), frozenset(pairs))


def default_crossing_edge_selector(rec: CrossingRecord, d: CombinatorialDrawing) -> EdgeId:
    """Deterministic default: remove the crossing edge with the smaller identifier."""
    e, f = rec.edges()
    return min(e, f, key=ident_key)


def remove_one_edge_per_crossing(
    d: CombinatorialDrawing,
    selector: Callable[[CrossingRecord, CombinatorialDrawing], EdgeId] = default_crossing_edge_selector,
) -> CombinatorialDrawing:
    """Delete one edge of every crossing pair, yielding a planar drawing.

    Requires a triangulated input: then every crossing is surrounded by four
    triangular regions, each deletion merges two pairs of them, and the
    result is planar and again triangulated.
    """
    validate(d).raise_if_rejected()
    regions = _regions_unchecked(d)
    bad = [r for r in regions if r.degree != 3]
    if bad:
        raise PreconditionError(
            f"drawing is not triangulated: region {bad[0].corner_tokens()} has degree {bad[0].degree}"
        )
    to_remove: set[EdgeId] = set()
    for rec in d.crossings:
        e = selector(rec, d)
        if e not in rec.edges():
            raise PreconditionError(f"selector chose {e}, not part of crossing {rec.token()}")
        to_remove.add(e)
    edges = {e: uv for e, uv in d.edges.items() if e not in to_remove}
    rotations = {
        v: tuple(h for h in rot if h.edge not in to_remove) for v, rot in d.rotations.items()
    }
    return CombinatorialDrawing(d.vertices, edges, rotations, (), mode=d.mode)
