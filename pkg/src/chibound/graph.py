"""Immutable simple undirected graphs with dense 0..n-1 vertex ids.

Every algorithm in this package works on :class:`Graph` values.  Graphs are
frozen after construction; "modifying" operations (induced subgraphs,
complements) return new values, so graphs can be shared freely between
search routines.  Iteration order is ascending vertex id everywhere, which
keeps witnesses and colourings reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

VertexSet = frozenset[int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``edges`` holds each edge once as a pair (u, v) with u < v.  ``nbr`` is
    the per-vertex neighbour set and ``bits`` the same information as a
    bitmask (bit v of ``bits[u]`` is set iff uv is an edge); both are derived
    from ``edges`` and kept consistent by :func:`build_graph`.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    nbr: tuple[frozenset[int], ...] = field(repr=False)
    bits: tuple[int, ...] = field(repr=False)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.bits[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.nbr[v]

    def degree(self, v: int) -> int:
        return len(self.nbr[v])

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self) -> str:  # keep reprs short; graphs can be large
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from a vertex count and an edge list.

    Duplicate edges (in either orientation) collapse.  Raises ``ValueError``
    on an out-of-range endpoint or a self-loop.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    edges = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        edges.add((u, v) if u < v else (v, u))
    nbr = [set() for _ in range(n)]
    for u, v in edges:
        nbr[u].add(v)
        nbr[v].add(u)
    bits = [0] * n
    for u, v in edges:
        bits[u] |= 1 << v
        bits[v] |= 1 << u
    return Graph(
        n=n,
        edges=frozenset(edges),
        nbr=tuple(frozenset(s) for s in nbr),
        bits=tuple(bits),
    )


class InducedSubgraph(NamedTuple):
    """Result of :func:`induced_subgraph`: the graph plus the renumbering.

    ``vertices[j]`` is the original id of new vertex j (ascending, so taking
    the full vertex set yields the identity renumbering).
    """

    graph: Graph
    vertices: tuple[int, ...]


def induced_subgraph(g: Graph, s: Iterable[int]) -> InducedSubgraph:
    """Subgraph induced by the vertex set ``s``, densely renumbered."""
    keep = sorted(set(s))
    for v in keep:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} not in graph with n={g.n}")
    index = {old: new for new, old in enumerate(keep)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return InducedSubgraph(build_graph(len(keep), edges), tuple(keep))


def complement(g: Graph) -> Graph:
    """Complement graph: distinct u,v adjacent iff non-adjacent in ``g``."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.adjacent(u, v)
    ]
    return build_graph(g.n, edges)


def components(g: Graph) -> tuple[frozenset[int], ...]:
    """Connected components as vertex sets, ordered by smallest member."""
    seen = [False] * g.n
    out: list[frozenset[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = [start]
        while stack:
            u = stack.pop()
            for w in g.nbr[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return tuple(out)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def components_within(g: Graph, s: Iterable[int]) -> tuple[frozenset[int], ...]:
    """Components of the subgraph induced by ``s``, in original vertex ids."""
    s = set(s)
    seen: set[int] = set()
    out: list[frozenset[int]] = []
    for start in sorted(s):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = [start]
        while stack:
            u = stack.pop()
            for w in g.nbr[u]:
                if w in s and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return tuple(out)


@dataclass(frozen=True)
class Coloring:
    """A (possibly partial) colour assignment with a declared palette size.

    ``colors`` maps vertex id to a colour in 1..palette.  Totality over a
    graph's vertex set is checked by ``verify_coloring``, not here, because
    block colourings of vertex subsets are first-class values during
    decomposition.
    """

    colors: dict[int, int]
    palette: int

    def to_json_dict(self) -> dict:
        return {
            "palette": self.palette,
            "colors": {str(v): c for v, c in sorted(self.colors.items())},
        }

    def to_dimacs_lines(self) -> list[str]:
        return [f"v {v} {c}" for v, c in sorted(self.colors.items())]
