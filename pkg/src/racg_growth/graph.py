"""Finite simple graphs and their clique combinatorics.

Vertices are the integers ``0 .. n-1``. Cliques are sorted tuples of
vertices; the empty tuple is the empty clique.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .algebra import Polynomial

Clique = tuple[int, ...]


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialGraph:
    """An undirected loopless graph on ``range(vertex_count)``."""

    vertex_count: int
    adjacency: tuple[frozenset[int], ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        if len(self.adjacency) != n:
            raise GraphError(f"expected {n} adjacency sets, got {len(self.adjacency)}")
        adj = tuple(frozenset(a) for a in self.adjacency)
        for u, nbrs in enumerate(adj):
            for v in nbrs:
                if not 0 <= v < n:
                    raise GraphError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise GraphError(f"loop at vertex {u}")
                if u not in adj[v]:
                    raise GraphError(f"adjacency not symmetric: {u}->{v}")
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(
            self, "_masks", tuple(sum(1 << v for v in nbrs) for nbrs in adj)
        )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimplicialGraph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj))

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.vertices for v in sorted(self.adjacency[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def neighbor_mask(self, v: int) -> int:
        """Bitmask of the neighbors of ``v``."""
        return self._masks[v]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            return False
        if any(not 0 <= v < self.vertex_count for v in vs):
            return False
        return all(self.adjacent(u, v) for u, v in combinations(vs, 2))

    def disjoint_union(self, other: SimplicialGraph) -> SimplicialGraph:
        k = self.vertex_count
        shifted = [(u + k, v + k) for u, v in other.edges()]
        return SimplicialGraph.from_edges(k + other.vertex_count, self.edges() + shifted)

    def relabel(self, perm: Sequence[int]) -> SimplicialGraph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(self.vertices):
            raise GraphError("relabeling must be a permutation of the vertices")
        return SimplicialGraph.from_edges(
            self.vertex_count, [(perm[u], perm[v]) for u, v in self.edges()]
        )


def _checked_clique(graph: SimplicialGraph, sigma: Iterable[int]) -> frozenset[int]:
    s = list(sigma)
    if not graph.is_clique(s):
        raise GraphError(f"{tuple(s)} is not a clique")
    return frozenset(s)


def link(graph: SimplicialGraph, sigma: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``sigma`` adjacent to every vertex of ``sigma``."""
    s = _checked_clique(graph, sigma)
    out = set(graph.vertices) - s
    for v in s:
        out &= graph.adjacency[v]
    return frozenset(out)


def star(graph: SimplicialGraph, sigma: Iterable[int]) -> frozenset[int]:
    s = _checked_clique(graph, sigma)
    return s | link(graph, s)


def enumerate_cliques(graph: SimplicialGraph) -> list[Clique]:
    """All cliques, the empty one included, ordered by size then lexicographically."""
    by_size: list[list[Clique]] = [[()]]
    frontier: list[tuple[Clique, frozenset[int]]] = [((), frozenset(graph.vertices))]
    while frontier:
        nxt = []
        for clique, candidates in frontier:
            for v in sorted(candidates):
                # extend only upward so each clique is produced once
                if clique and v <= clique[-1]:
                    continue
                nxt.append((clique + (v,), candidates & graph.adjacency[v]))
        if not nxt:
            break
        nxt.sort(key=lambda t: t[0])
        by_size.append([c for c, _ in nxt])
        frontier = nxt
    return [c for level in by_size for c in level]


def f_polynomial(graph: SimplicialGraph) -> Polynomial:
    counts: dict[int, int] = {}
    for c in enumerate_cliques(graph):
        counts[len(c)] = counts.get(len(c), 0) + 1
    return Polynomial(counts.get(k, 0) for k in range(max(counts) + 1))


@dataclass(frozen=True)
class LinkRegularParams:
    """The triple ``(n, l, q)``: vertices, vertex-link size, edge-link size."""

    n: int
    l: int
    q: int

    def __post_init__(self):
        n, l, q = self.n, self.l, self.q
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        if not 0 <= l <= n - 1:
            raise ValueError(f"need 0 <= l <= n-1, got l={l}, n={n}")
        if l == 0 and q != 0:
            raise ValueError("q must be 0 when l = 0")
        if l > 0 and not 0 <= q <= l - 1:
            raise ValueError(f"need 0 <= q <= l-1, got q={q}, l={l}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n, self.l, self.q)

    def realizability_problems(self) -> list[str]:
        """Reasons no graph can have these parameters (empty if none found)."""
        problems = []
        if (self.n * self.l) % 2:
            problems.append(f"n*l = {self.n * self.l} is odd (edge count n*l/2)")
        if (self.n * self.l * self.q) % 6:
            problems.append(
                f"n*l*q = {self.n * self.l * self.q} is not divisible by 6 (triangle count n*l*q/6)"
            )
        return problems

    def doubled(self) -> LinkRegularParams:
        return LinkRegularParams(2 * self.n, 2 * self.l, 2 * self.q)


@dataclass(frozen=True)
class LinkRegularity:
    """Outcome of :func:`check_link_regular`.

    ``params`` is set when the graph is link-regular in clique sizes 1 to 3;
    otherwise ``witness`` holds two same-size cliques with different link sizes.
    """

    params: LinkRegularParams | None
    tetra_free: bool
    witness: tuple[Clique, Clique] | None = None
    witness_link_sizes: tuple[int, int] | None = None

    @property
    def link_regular(self) -> bool:
        return self.params is not None

    @property
    def in_formula_regime(self) -> bool:
        return self.link_regular and self.tetra_free


def check_link_regular(graph: SimplicialGraph) -> LinkRegularity:
    if graph.vertex_count == 0:
        raise GraphError("link-regularity is undefined for the empty graph")
    cliques = enumerate_cliques(graph)
    tetra_free = all(len(c) < 4 for c in cliques)
    sizes: dict[int, tuple[Clique, int]] = {}
    for c in cliques:
        if not 1 <= len(c) <= 3:
            continue
        k = len(link(graph, c))
        first = sizes.setdefault(len(c), (c, k))
        if first[1] != k:
            return LinkRegularity(None, tetra_free, (first[0], c), (first[1], k))
    l = sizes[1][1]
    q = sizes[2][1] if 2 in sizes else 0
    return LinkRegularity(LinkRegularParams(graph.vertex_count, l, q), tetra_free)


def double(graph: SimplicialGraph) -> SimplicialGraph:
    """The double: vertex ``v`` gets a twin ``v + n``; each edge becomes four."""
    n = graph.vertex_count
    edges = []
    for u, v in graph.edges():
        edges += [(u, v), (u + n, v), (u, v + n), (u + n, v + n)]
    return SimplicialGraph.from_edges(2 * n, edges)


# ---------------------------------------------------------------------------
# named families


def discrete_graph(n: int) -> SimplicialGraph:
    return SimplicialGraph.from_edges(n, [])


def cycle_graph(n: int) -> SimplicialGraph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return SimplicialGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> SimplicialGraph:
    return SimplicialGraph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> SimplicialGraph:
    return SimplicialGraph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> SimplicialGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimplicialGraph.from_edges(10, outer + spokes + inner)


def triangle_double(m: int) -> SimplicialGraph:
    """The triangle doubled ``m`` times."""
    if m < 0:
        raise GraphError("doubling count must be nonnegative")
    g = complete_graph(3)
    for _ in range(m):
        g = double(g)
    return g


FAMILIES = {
    "discrete": (1, discrete_graph),
    "cycle": (1, cycle_graph),
    "complete": (1, complete_graph),
    "complete_bipartite": (2, complete_bipartite_graph),
    "petersen": (0, petersen_graph),
    "triangle_double": (1, triangle_double),
}


def generate_family(spec: str) -> SimplicialGraph:
    """Build a named graph from ``"family:args"``, e.g. ``"cycle:5"`` or
    ``"complete_bipartite:3,3"``."""
    name, _, rest = spec.strip().partition(":")
    if name not in FAMILIES:
        raise GraphError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
    arity, builder = FAMILIES[name]
    raw = [a for a in rest.split(",") if a.strip()] if rest else []
    if len(raw) != arity:
        raise GraphError(f"family {name!r} takes {arity} size argument(s), got {len(raw)}")
    try:
        args = [int(a) for a in raw]
    except ValueError:
        raise GraphError(f"non-integer size in {spec!r}") from None
    if any(a < 0 for a in args):
        raise GraphError(f"negative size in {spec!r}")
    return builder(*args)
