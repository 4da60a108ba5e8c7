"""Census counts, counting identities, and the degree-7 lower-bound certificate.

For a drawing the census quintuple is (n, m, x, t, n7): vertices, edges,
crossings, uncrossed triangular regions, and vertices of degree exactly 7.
On triangulated drawings the counts are tied together by exact integer
identities; chaining them shows that a drawing with minimum degree 7 must
contain at least 24 vertices of degree exactly 7.  Every check here is run
in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    CombinatorialDrawing,
    IntegrityError,
    PreconditionError,
    Region,
    VertexCorner,
    ident_key,
    validate,
    _regions_unchecked,
)
from .triangulation import triangulate


@dataclass(frozen=True)
class Census:
    n: int
    m: int
    x: int
    t: int
    n7: int
    degree_histogram: tuple[tuple[int, int], ...]  # (degree, count), ascending
    min_degree: int

    @property
    def quintuple(self) -> tuple[int, int, int, int, int]:
        return (self.n, self.m, self.x, self.t, self.n7)


def census(d: CombinatorialDrawing) -> Census:
    """Count (n, m, x, t, n7) plus the degree histogram of a drawing.

    t counts degree-3 regions whose corners are all vertices; loops add 2
    to the degree of their vertex.
    """
    validate(d).raise_if_rejected()
    regions = _regions_unchecked(d)
    degs = d.degrees()
    hist: dict[int, int] = {}
    for deg in degs.values():
        hist[deg] = hist.get(deg, 0) + 1
    t = sum(1 for r in regions if r.degree == 3 and r.uncrossed)
    return Census(
        n=d.n,
        m=d.m,
        x=d.x,
        t=t,
        n7=hist.get(7, 0),
        degree_histogram=tuple(sorted(hist.items())),
        min_degree=min(degs.values()) if degs else 0,
    )


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    applicable: bool
    reason: str  # failed precondition when inapplicable, else ""
    left: Optional[int]
    right: Optional[int]
    holds: Optional[bool]


@dataclass(frozen=True)
class IdentityReport:
    checks: tuple[IdentityCheck, ...]

    def check(self, name: str) -> IdentityCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def all_applicable_hold(self) -> bool:
        return all(c.holds for c in self.checks if c.applicable)


def check_identities(d: CombinatorialDrawing) -> IdentityReport:
    """Evaluate the counting identities that hold on triangulated drawings.

    edge-count      m = 3n - 6 + x
    region-count    2n - 4 = 2x + t
    edge-bound      2m <= 8n - 16 - t   (doubled to stay in integers)
    degree-sum      2m >= 8n - n7       (needs min degree >= 7)
    degree7-charge  n7 <= 3t            (needs min degree >= 7)

    Identities whose hypotheses the drawing does not meet are reported as
    inapplicable, never asserted.
    """
    validate(d).raise_if_rejected()
    c = census(d)
    regions = _regions_unchecked(d)
    triangulated = all(r.degree == 3 for r in regions)
    min7 = c.min_degree >= 7

    checks = []

    def add(name: str, applicable: bool, reason: str, left: int, right: int, op) -> None:
        if applicable:
            checks.append(IdentityCheck(name, True, "", left, right, op(left, right)))
        else:
            checks.append(IdentityCheck(name, False, reason, None, None, None))

    eq = lambda a, b: a == b
    le = lambda a, b: a <= b
    ge = lambda a, b: a >= b

    not_tri = "not triangulated"
    add("edge-count", triangulated, not_tri, c.m, 3 * c.n - 6 + c.x, eq)
    add("region-count", triangulated, not_tri, 2 * c.n - 4, 2 * c.x + c.t, eq)
    add("edge-bound", triangulated, not_tri, 2 * c.m, 8 * c.n - 16 - c.t, le)
    gate7 = triangulated and min7
    reason7 = not_tri if not triangulated else "min degree < 7"
    add("degree-sum", gate7, reason7, 2 * c.m, 8 * c.n - c.n7, ge)
    add("degree7-charge", gate7, reason7, c.n7, 3 * c.t, le)

    return IdentityReport(tuple(checks))


@dataclass(frozen=True)
class TheoremReport:
    """Executable certificate that a min-degree-7 drawing has n7 >= 24.

    ``chain`` holds (3*n7, 24n - 6m, 6n + 36 - 6x, 48 + 3t, 48 + n7)
    evaluated on the triangulated drawing; each entry is >= the next, which
    forces n7 >= 24 there.  Degrees only grow under triangulation, so every
    degree-7 vertex of the triangulated drawing already had degree 7 in the
    original; those vertices are listed.
    """

    chain: tuple[int, int, int, int, int]
    n7_triangulated: int
    n7_original: int
    degree7_vertices: tuple[str, ...]
    triangulation_steps: int

    @property
    def holds(self) -> bool:
        return self.n7_original >= 24


def verify_min_degree7_theorem(d: CombinatorialDrawing) -> TheoremReport:
    """Run the full lower-bound argument on one drawing.

    Raises PreconditionError if the minimum degree is below 7, and
    IntegrityError if any link of the chain fails (the chain is a theorem,
    so a failure signals a corrupt drawing or a toolkit bug).
    """
    validate(d).raise_if_rejected()
    if d.min_degree() < 7:
        raise PreconditionError(f"minimum degree is {d.min_degree()}, need >= 7")

    tri, steps = triangulate(d)
    c = census(tri)
    chain = (
        3 * c.n7,
        24 * c.n - 6 * c.m,
        6 * c.n + 36 - 6 * c.x,
        48 + 3 * c.t,
        48 + c.n7,
    )
    for i in range(len(chain) - 1):
        if chain[i] < chain[i + 1]:
            raise IntegrityError(
                f"chain link {i}: {chain[i]} < {chain[i + 1]} (chain {chain})"
            )
    if c.n7 < 24:
        raise IntegrityError(f"chain implies n7 >= 24 but census found {c.n7}")

    tri_degrees = tri.degrees()
    orig_degrees = d.degrees()
    witnesses = tuple(
        sorted((v for v in tri.vertices if tri_degrees[v] == 7), key=ident_key)
    )
    for v in witnesses:
        if orig_degrees[v] != 7:  # impossible: degrees never shrink
            raise IntegrityError(f"vertex {v} has degree 7 only after triangulation")
    n7_original = sum(1 for deg in orig_degrees.values() if deg == 7)
    return TheoremReport(
        chain=chain,
        n7_triangulated=c.n7,
        n7_original=n7_original,
        degree7_vertices=witnesses,
        triangulation_steps=len(steps),
    )


@dataclass(frozen=True)
class WitnessReport:
    """Per-vertex uncrossed-region witnesses on a triangulated drawing.

    ``witness`` maps each degree-7 vertex to the index (in canonical region
    order) of an uncrossed triangular region incident to it, found between
    two consecutive uncrossed edges of its rotation.  ``charges`` counts how
    many vertices picked each region; no region is ever charged more than 3
    times since it has only three corners.
    """

    witness: tuple[tuple[str, int], ...]
    charges: tuple[tuple[int, int], ...]

    @property
    def max_charge(self) -> int:
        return max((c for _r, c in self.charges), default=0)


def verify_degree7_witnesses(d: CombinatorialDrawing) -> WitnessReport:
    """Check the charging argument behind n7 <= 3t, vertex by vertex.

    Requires a triangulated drawing with minimum degree >= 7.  For every
    degree-7 vertex: no two consecutive incident edges are both crossed, an
    odd degree then forces two consecutive uncrossed edges, and the region
    between them must be an uncrossed triangle.
    """
    validate(d).raise_if_rejected()
    regions = _regions_unchecked(d)
    if any(r.degree != 3 for r in regions):
        raise PreconditionError("witness check needs a triangulated drawing")
    if d.min_degree() < 7:
        raise PreconditionError(f"minimum degree is {d.min_degree()}, need >= 7")

    region_of_dart: dict[tuple[str, int], int] = {}
    for ri, r in enumerate(regions):
        for dart in r.darts:
            region_of_dart[dart] = ri

    crossed = d.crossed_edges()
    witness: list[tuple[str, int]] = []
    charges: dict[int, int] = {}
    for v in d.vertices:
        rot = d.rotations[v]
        deg = len(rot)
        if deg != 7:
            continue
        for i in range(deg):
            a, b = rot[i], rot[(i + 1) % deg]
            if a.edge in crossed and b.edge in crossed:
                raise IntegrityError(
                    f"consecutive crossed edges {a.edge},{b.edge} at {v} in a triangulated drawing"
                )
        gap = next(
            (
                i
                for i in range(deg)
                if rot[i].edge not in crossed and rot[(i + 1) % deg].edge not in crossed
            ),
            None,
        )
        if gap is None:  # cannot happen at odd degree
            raise IntegrityError(f"no two consecutive uncrossed edges at degree-7 vertex {v}")
        # the corner between rot[gap] and rot[gap+1] belongs to the face
        # entered by the dart at index gap+1
        ri = region_of_dart[(v, (gap + 1) % deg)]
        region = regions[ri]
        if not (region.degree == 3 and region.uncrossed):
            raise IntegrityError(
                f"corner witness at {v} is not an uncrossed triangle: {region.corner_tokens()}"
            )
        if not any(isinstance(c, VertexCorner) and c.vertex == v for c in region.corners):
            raise IntegrityError(f"witness region for {v} does not contain {v}")
        witness.append((v, ri))
        charges[ri] = charges.get(ri, 0) + 1

    for ri, count in charges.items():
        if count > 3:
            raise IntegrityError(
                f"region {regions[ri].corner_tokens()} charged {count} > 3 times"
            )
    return WitnessReport(tuple(witness), tuple(sorted(charges.items())))
