"""Drawing model: validation, planarization, regions, edge deletion."""

import pytest

from oneplanar import (
    CombinatorialDrawing,
    CrossingRecord,
    HalfEdge,
    PreconditionError,
    StructureError,
    enumerate_regions,
    planarize,
    remove_one_edge_per_crossing,
    underlying_graph,
    validate,
)
from oneplanar.constructions import fixture
from oneplanar.core import VertexCorner, _regions_unchecked
from oneplanar.triangulation import triangulate


def corner_sets(d):
    return sorted(sorted(r.corner_tokens()) for r in enumerate_regions(d))


# hand face-trace: the four triangles of the tetrahedron
K4_REGIONS = sorted(
    [sorted(t) for t in (("a", "b", "c"), ("a", "c", "d"), ("a", "d", "b"), ("b", "d", "c"))]
)


def test_k4_planar_regions_hand_trace():
    d = fixture("k4_planar")
    regions = enumerate_regions(d)
    assert len(regions) == 4
    assert all(r.degree == 3 and r.uncrossed for r in regions)
    assert corner_sets(d) == K4_REGIONS


def test_k4_crossed_regions_hand_trace():
    d = fixture("k4_crossed")
    regions = enumerate_regions(d)
    assert len(regions) == 5
    by_degree = sorted(r.degree for r in regions)
    assert by_degree == [3, 3, 3, 3, 4]
    outer = [r for r in regions if r.degree == 4]
    assert len(outer) == 1 and outer[0].uncrossed
    assert sorted(outer[0].corner_tokens()) == ["a", "b", "c", "d"]
    for r in regions:
        if r.degree == 3:
            # one crossing corner and two vertex corners each
            assert sum(1 for c in r.corners if isinstance(c, VertexCorner)) == 2


def test_planarize_counts():
    d = fixture("k4_crossed")
    skel = planarize(d)
    assert skel.drawing.n == 5 and skel.drawing.m == 8
    assert len(skel.dummies) == 1
    assert len(_regions_unchecked(skel.drawing)) == 5  # Euler: 2 - 5 + 8

    f = fixture("fig1")
    skel = planarize(f)
    assert skel.drawing.n == 42 and skel.drawing.m == 120
    assert skel.drawing.x == 0


def test_planarize_identity_when_no_crossings():
    d = fixture("k4_planar")
    skel = planarize(d)
    assert skel.drawing == d
    assert not skel.dummies


@pytest.mark.parametrize("name", ["k4_planar", "k4_crossed", "k6", "fig1", "c4"])
def test_planarize_restore_roundtrip(name):
    d = fixture(name)
    assert planarize(d).restore() == d


@pytest.mark.parametrize("name", ["k4_planar", "k4_crossed", "k6", "fig1", "octahedron"])
def test_region_degree_handshake(name):
    d = fixture(name)
    regions = enumerate_regions(d)
    assert sum(r.degree for r in regions) == 2 * (d.m + 2 * d.x)
    for r in regions:
        assert r.degree >= 3
        for i in range(r.degree):  # no two crossing corners adjacent
            a = isinstance(r.corners[i], VertexCorner)
            b = isinstance(r.corners[(i + 1) % r.degree], VertexCorner)
            assert a or b


def test_vertex_degree_handshake(corpus):
    for name, d in corpus.items():
        assert sum(d.degrees().values()) == 2 * d.m, name


# --- validation -----------------------------------------------------------


def _k4_base():
    d = fixture("k4_planar")
    return dict(
        vertices=d.vertices, edges=dict(d.edges), rotations=dict(d.rotations), crossings=[]
    )


def test_validate_fig1_accepted():
    d = fixture("fig1")
    report = validate(d)
    assert report.accepted
    assert d.n == 24 and d.min_degree() == 7


def test_adjacent_edges_crossing_flagged():
    args = _k4_base()
    args["crossings"] = [CrossingRecord(HalfEdge("a-b", 0), HalfEdge("a-c", 0))]
    report = validate(CombinatorialDrawing(**args))
    assert "adjacent-edges-cross" in report.codes()


def test_edge_in_two_crossings_flagged():
    args = _k4_base()
    args["crossings"] = [
        CrossingRecord(HalfEdge("a-c", 0), HalfEdge("b-d", 0)),
        CrossingRecord(HalfEdge("a-c", 0), HalfEdge("b-d", 1)),
    ]
    report = validate(CombinatorialDrawing(**args))
    assert "edge-crossed-twice" in report.codes()


def test_self_crossing_flagged():
    args = _k4_base()
    args["crossings"] = [CrossingRecord(HalfEdge("a-c", 0), HalfEdge("a-c", 1))]
    report = validate(CombinatorialDrawing(**args))
    assert "self-crossing" in report.codes()


def test_rotation_inconsistency_flagged():
    args = _k4_base()
    rot = dict(args["rotations"])
    rot["a"], rot["b"] = rot["b"], rot["a"]  # half-edges at the wrong vertices
    args["rotations"] = rot
    report = validate(CombinatorialDrawing(**args))
    assert "rotation-inconsistency" in report.codes()


def test_euler_failure_flagged():
    # swapping two entries in one rotation breaks the sphere embedding
    args = _k4_base()
    rot = dict(args["rotations"])
    ra = list(rot["a"])
    ra[0], ra[1] = ra[1], ra[0]
    rot["a"] = tuple(ra)
    args["rotations"] = rot
    report = validate(CombinatorialDrawing(**args))
    assert "euler-characteristic" in report.codes()


def test_disconnected_rejected():
    d = CombinatorialDrawing(
        vertices=["a", "b", "c", "d"],
        edges={"e1": ("a", "b"), "e2": ("c", "d")},
        rotations={
            "a": [HalfEdge("e1", 0)],
            "b": [HalfEdge("e1", 1)],
            "c": [HalfEdge("e2", 0)],
            "d": [HalfEdge("e2", 1)],
        },
    )
    assert "disconnected" in validate(d).codes()


def test_too_few_vertices_rejected():
    d = CombinatorialDrawing(
        vertices=["a", "b"],
        edges={"e": ("a", "b")},
        rotations={"a": [HalfEdge("e", 0)], "b": [HalfEdge("e", 1)]},
    )
    assert "too-few-vertices" in validate(d).codes()


def test_loops_and_parallels_rejected_in_simple_mode():
    d = CombinatorialDrawing(
        vertices=["a", "b", "c"],
        edges={"e1": ("a", "b"), "e2": ("a", "b"), "e3": ("b", "c"), "e4": ("c", "c")},
        rotations={
            "a": [HalfEdge("e1", 0), HalfEdge("e2", 0)],
            "b": [HalfEdge("e1", 1), HalfEdge("e3", 0), HalfEdge("e2", 1)],
            "c": [HalfEdge("e3", 1), HalfEdge("e4", 0), HalfEdge("e4", 1)],
        },
        mode="simple",
    )
    codes = validate(d).codes()
    assert "loop-in-simple-mode" in codes
    assert "parallel-edges-in-simple-mode" in codes


def test_unresolved_identifiers_raise():
    with pytest.raises(StructureError):
        CombinatorialDrawing(
            vertices=["a", "b", "c"],
            edges={"e": ("a", "zz")},
            rotations={"a": [HalfEdge("e", 0)]},
        )
    with pytest.raises(StructureError):
        CombinatorialDrawing(
            vertices=["a", "b", "c"],
            edges={"e": ("a", "b")},
            rotations={"a": [HalfEdge("nope", 0)], "b": [HalfEdge("e", 1)]},
        )


# --- underlying graph ------------------------------------------------------


def test_underlying_graph_identity_on_simple():
    d = fixture("k6")
    g = underlying_graph(d)
    assert len(g.vertices) == 6 and len(g.edges) == 15


def test_underlying_graph_collapses_multigraph():
    tri_c4 = triangulate(fixture("c4")).drawing  # doubled diagonal
    assert tri_c4.m == 6
    g = underlying_graph(tri_c4)
    assert len(g.vertices) == 4 and len(g.edges) == 5


def test_underlying_graph_fig1_is_7_regular():
    g = underlying_graph(fixture("fig1"))
    assert len(g.vertices) == 24 and len(g.edges) == 84
    adj = g.adjacency()
    assert all(len(adj[v]) == 7 for v in g.vertices)


# --- edge deletion ---------------------------------------------------------


def test_remove_one_edge_per_crossing_k4():
    tri = triangulate(fixture("k4_crossed")).drawing
    assert tri.m == 7
    planar = remove_one_edge_per_crossing(tri)
    assert planar.x == 0 and planar.m == 6
    regions = enumerate_regions(planar)
    assert len(regions) == 4 and all(r.degree == 3 for r in regions)


def test_remove_one_edge_per_crossing_fig1():
    planar = remove_one_edge_per_crossing(fixture("fig1"))
    assert planar.x == 0 and planar.m == 66  # 3n - 6
    regions = enumerate_regions(planar)
    assert len(regions) == 44  # 2n - 4
    assert all(r.degree == 3 for r in regions)
    assert validate(planar).accepted


def test_remove_identity_without_crossings():
    d = fixture("k4_planar")
    assert remove_one_edge_per_crossing(d) == d


def test_remove_requires_triangulated_input():
    with pytest.raises(PreconditionError):
        remove_one_edge_per_crossing(fixture("k4_crossed"))


def test_remove_selector_is_deterministic():
    f = fixture("fig1")
    assert remove_one_edge_per_crossing(f) == remove_one_edge_per_crossing(f)
    # selector picks the smaller edge id, so the kept edge is the larger one
    rec = f.crossings[0]
    gone = min(rec.edges(), key=lambda e: (len(e), e))
    assert gone not in remove_one_edge_per_crossing(f).edges
