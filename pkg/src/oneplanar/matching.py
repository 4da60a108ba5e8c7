"""Exact maximum matching on general graphs, with deficiency certificates.

The solver is the classic augmenting-path search with blossom contraction
(O(V^3)); it is deterministic because vertices are scanned in canonical
order.  A brute-force oracle is provided for cross-checking on small
graphs, plus the easy direction of the Tutte-Berge bound: for any vertex
set U, no matching can exceed (n - (oc(G-U) - |U|)) / 2 where oc counts
odd-cardinality components.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .core import PreconditionError, ident_key

VertexId = str
Edge = tuple[VertexId, VertexId]


def _edge(u: VertexId, v: VertexId) -> Edge:
    return (u, v) if ident_key(u) <= ident_key(v) else (v, u)


@dataclass(frozen=True)
class UndirectedSimpleGraph:
    """Vertex set plus a set of unordered vertex pairs; no loops, no parallels."""

    vertices: frozenset[VertexId]
    edges: frozenset[Edge]

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at {u} not allowed in a simple graph")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge ({u},{v}) references unknown vertex")
            if (v, u) in self.edges and (u, v) != _edge(u, v):
                raise ValueError(f"edge ({u},{v}) not in canonical order")

    @staticmethod
    def from_edges(edges: Iterable[tuple[VertexId, VertexId]], vertices: Iterable[VertexId] = ()) -> "UndirectedSimpleGraph":
        vs = set(vertices)
        es = set()
        for u, v in edges:
            vs.add(u)
            vs.add(v)
            es.add(_edge(u, v))
        return UndirectedSimpleGraph(frozenset(vs), frozenset(es))

    def sorted_vertices(self) -> list[VertexId]:
        return sorted(self.vertices, key=ident_key)

    def adjacency(self) -> dict[VertexId, list[VertexId]]:
        adj: dict[VertexId, list[VertexId]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for v in adj:
            adj[v].sort(key=ident_key)
        return adj

    def without_vertices(self, drop: Iterable[VertexId]) -> "UndirectedSimpleGraph":
        gone = set(drop)
        return UndirectedSimpleGraph(
            frozenset(v for v in self.vertices if v not in gone),
            frozenset(e for e in self.edges if e[0] not in gone and e[1] not in gone),
        )

    def components(self) -> list[frozenset[VertexId]]:
        adj = self.adjacency()
        seen: set[VertexId] = set()
        comps = []
        for start in self.sorted_vertices():
            if start in seen:
                continue
            comp = {start}
            todo = deque([start])
            while todo:
                v = todo.popleft()
                for w in adj[v]:
                    if w not in comp:
                        comp.add(w)
                        todo.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps


@dataclass(frozen=True)
class TutteBergeCertificate:
    separator: frozenset[VertexId]
    odd_components: int
    bound: int


@dataclass(frozen=True)
class MatchingResult:
    matching: frozenset[Edge]
    certificate: Optional[TutteBergeCertificate] = None

    @property
    def size(self) -> int:
        return len(self.matching)

    def __post_init__(self):
        used: set[VertexId] = set()
        for u, v in self.matching:
            if u in used or v in used:
                raise IntegrityErrorLike(f"matching edges share vertex {u if u in used else v}")
            used.add(u)
            used.add(v)
        if self.certificate is not None and self.size > self.certificate.bound:
            raise IntegrityErrorLike(
                f"matching of size {self.size} exceeds certified bound {self.certificate.bound}"
            )


class IntegrityErrorLike(RuntimeError):
    """A matching result violated its own invariants (solver bug)."""


# ---------------------------------------------------------------------------
# blossom search


def maximum_matching(g: UndirectedSimpleGraph, certificate_vertices: Optional[Iterable[VertexId]] = None) -> MatchingResult:
    """Maximum-cardinality matching via augmenting paths with blossom contraction.

    If ``certificate_vertices`` is given, the result carries the
    Tutte-Berge certificate for that separator set.
    """
    order = g.sorted_vertices()
    index = {v: i for i, v in enumerate(order)}
    n = len(order)
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted(g.edges):
        adj[index[u]].append(index[v])
        adj[index[v]].append(index[u])
    for row in adj:
        row.sort()

    match = [-1] * n
    for root in range(n):
        if match[root] == -1:
            _augment_from(root, adj, match)

    pairs = frozenset(_edge(order[i], order[match[i]]) for i in range(n) if match[i] > i)
    cert = None
    if certificate_vertices is not None:
        u_set = frozenset(certificate_vertices)
        bound, oc = _tutte_berge(g, u_set)
        cert = TutteBergeCertificate(u_set, oc, bound)
    return MatchingResult(pairs, cert)


def _augment_from(root: int, adj: list[list[int]], match: list[int]) -> bool:
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n
    in_queue[root] = True
    queue = deque([root])

    def find_common_base(a: int, b: int) -> int:
        on_path = [False] * n
        u = a
        while True:
            u = base[u]
            on_path[u] = True
            if match[u] == -1:
                break
            u = parent[match[u]]
        u = b
        while True:
            u = base[u]
            if on_path[u]:
                return u
            u = parent[match[u]]

    def contract_path(u: int, stem: int, child: int, in_blossom: list[bool]) -> None:
        while base[u] != stem:
            in_blossom[base[u]] = True
            in_blossom[base[match[u]]] = True
            parent[u] = child
            child = match[u]
            u = parent[match[u]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # closed an odd cycle: contract the blossom
                stem = find_common_base(v, to)
                in_blossom = [False] * n
                contract_path(v, stem, to, in_blossom)
                contract_path(to, stem, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = stem
                        if not in_queue[i]:
                            in_queue[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    # augmenting path found: flip matched edges back to root
                    u = to
                    while u != -1:
                        pv = parent[u]
                        nxt = match[pv]
                        match[u] = pv
                        match[pv] = u
                        u = nxt
                    return True
                in_queue[match[to]] = True
                queue.append(match[to])
    return False


# ---------------------------------------------------------------------------
# independent oracle


BRUTE_FORCE_LIMIT = 16


def brute_force_matching_size(g: UndirectedSimpleGraph) -> int:
    """Exact maximum matching size by exhaustive search; |V| <= 16 only."""
    order = g.sorted_vertices()
    n = len(order)
    if n > BRUTE_FORCE_LIMIT:
        raise PreconditionError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices, got {n}")
    index = {v: i for i, v in enumerate(order)}
    nbr = [0] * n
    for u, v in g.edges:
        nbr[index[u]] |= 1 << index[v]
        nbr[index[v]] |= 1 << index[u]

    best = [0] * (1 << n)
    for mask in range(1, 1 << n):
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        score = best[rest]  # v stays unmatched
        options = nbr[v] & rest
        while options:
            w_bit = options & -options
            options ^= w_bit
            cand = 1 + best[rest ^ w_bit]
            if cand > score:
                score = cand
        best[mask] = score
    return best[(1 << n) - 1]


# ---------------------------------------------------------------------------
# Tutte-Berge deficiency bound


def _tutte_berge(g: UndirectedSimpleGraph, u_set: frozenset[VertexId]) -> tuple[int, int]:
    if not u_set <= g.vertices:
        raise PreconditionError(f"separator {sorted(u_set - g.vertices, key=ident_key)} not in the graph")
    oc = sum(1 for comp in g.without_vertices(u_set).components() if len(comp) % 2 == 1)
    n = len(g.vertices)
    return (n - (oc - len(u_set))) // 2, oc


def tutte_berge_upper_bound(g: UndirectedSimpleGraph, separator: Iterable[VertexId]) -> int:
    """Matching-size bound floor((n - (oc(G-U) - |U|)) / 2) for the given U."""
    bound, _oc = _tutte_berge(g, frozenset(separator))
    return bound


def lemma_matching_bound(n: int) -> Fraction:
    """Exact rational matching bound (11n + 12) / 23 for the glued families."""
    return Fraction(11 * n + 12, 23)
