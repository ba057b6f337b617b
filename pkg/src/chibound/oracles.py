"""Exact chromatic/clique oracles and graph constructions.

The oracles are deliberately implemented on two distinct routes so they can
cross-check each other: ``chromatic_number`` is a DSATUR-ordered branch and
bound that minimizes the colour count directly, while ``k_coloring_search``
(backing ``coloring.color_exact_bounded``) is a fixed-k backtracking over a
static vertex order.  Desk-scale only; both are exponential in the worst
case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Coloring, Graph, build_graph, induced_subgraph
from .patterns import find_diamond_bits, find_induced_path_bits


# ---------------------------------------------------------------------------
# cliques (Bron-Kerbosch with pivoting, bitmask sets)
# ---------------------------------------------------------------------------

def _bits_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques, each as a sorted tuple, in a deterministic order."""
    bits = g.bits
    out: list[tuple[int, ...]] = []

    def bk(r: list[int], p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(tuple(sorted(r)))
            return
        # pivot: vertex of p|x with most neighbours inside p (least id wins ties)
        pivot, best = -1, -1
        for u in _bits_list(p | x):
            cnt = (p & bits[u]).bit_count()
            if cnt > best:
                pivot, best = u, cnt
        for v in _bits_list(p & ~bits[pivot]):
            r.append(v)
            bk(r, p & bits[v], x & bits[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    bk([], (1 << g.n) - 1, 0)
    return sorted(out)


def clique_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Size of a maximum clique together with one witness clique."""
    if g.n == 0:
        return 0, ()
    bits = g.bits
    best: list[int] = []

    def bk(r: list[int], p: int, x: int) -> None:
        nonlocal best
        if len(r) + p.bit_count() <= len(best):
            return
        if p == 0 and x == 0:
            if len(r) > len(best):
                best = sorted(r)
            return
        pivot, most = -1, -1
        for u in _bits_list(p | x):
            cnt = (p & bits[u]).bit_count()
            if cnt > most:
                pivot, most = u, cnt
        for v in _bits_list(p & ~bits[pivot]):
            r.append(v)
            bk(r, p & bits[v], x & bits[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    bk([], (1 << g.n) - 1, 0)
    return len(best), tuple(best)


# ---------------------------------------------------------------------------
# exact colouring
# ---------------------------------------------------------------------------

def k_coloring_search(g: Graph, k: int) -> dict[int, int] | None:
    """A proper k-colouring as a vertex->colour dict, or None.

    Backtracking over vertices in descending-degree order (ties by id) with
    colour-symmetry breaking: a vertex may only use colours up to one more
    than the largest colour used so far.  Deterministic.
    """
    n = g.n
    if n == 0:
        return {}
    if k < 1:
        return None
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    earlier = [
        [pos[w] for w in g.nbr[v] if pos[w] < pos[v]] for v in order
    ]
    color = [0] * n

    def assign(i: int, max_used: int) -> bool:
        if i == n:
            return True
        forb = 0
        for j in earlier[i]:
            forb |= 1 << color[j]
        cap = min(k, max_used + 1)
        for c in range(1, cap + 1):
            if forb >> c & 1:
                continue
            color[i] = c
            if assign(i + 1, max(max_used, c)):
                return True
        color[i] = 0
        return False

    if not assign(0, 0):
        return None
    return {order[i]: color[i] for i in range(n)}


def _greedy_dsatur(g: Graph) -> dict[int, int]:
    """Greedy DSATUR colouring; an upper bound seed for the branch and bound."""
    n = g.n
    color: dict[int, int] = {}
    sat: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = min(
            (u for u in range(n) if u not in color),
            key=lambda u: (-len(sat[u]), -g.degree(u), u),
        )
        c = 1
        while c in sat[v]:
            c += 1
        color[v] = c
        for w in g.nbr[v]:
            sat[w].add(c)
    return color


def chromatic_number(g: Graph, guard: int = 40) -> tuple[int, Coloring]:
    """Exact chromatic number with an optimal colouring.

    DSATUR-ordered branch and bound: branch on the most saturated uncoloured
    vertex, try its feasible existing colours then at most one fresh colour,
    prune against the incumbent, stop when the clique lower bound is met.
    """
    if g.n > guard:
        raise ValueError(f"chromatic_number guard exceeded: n={g.n} > {guard}")
    if g.n == 0:
        return 0, Coloring({}, 0)
    lb, _ = clique_number(g)
    greedy = _greedy_dsatur(g)
    best_k = max(greedy.values())
    best = dict(greedy)
    if best_k == lb:
        return best_k, Coloring(best, best_k)

    n = g.n
    color = [0] * n
    nbr_colors = [set() for _ in range(n)]

    def bb(colored: int, used: int) -> None:
        nonlocal best_k, best
        if used >= best_k:
            return
        if colored == n:
            best_k = used
            best = {v: color[v] for v in range(n)}
            return
        v = min(
            (u for u in range(n) if color[u] == 0),
            key=lambda u: (-len(nbr_colors[u]), -g.degree(u), u),
        )
        limit = min(used + 1, best_k - 1)
        for c in range(1, limit + 1):
            if c in nbr_colors[v]:
                continue
            color[v] = c
            touched = [w for w in g.nbr[v] if c not in nbr_colors[w]]
            for w in touched:
                nbr_colors[w].add(c)
            bb(colored + 1, max(used, c))
            for w in touched:
                nbr_colors[w].discard(c)
            color[v] = 0
            if best_k == lb:
                return

    bb(0, 0)
    return best_k, Coloring(best, best_k)


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def mycielskian(g: Graph) -> Graph:
    """Mycielski construction: one shadow per vertex plus an apex.

    Shadow n+u is adjacent to N(u); the apex 2n is adjacent to all shadows.
    Raises the chromatic number by one while preserving triangle-freeness.
    """
    n = g.n
    edges = list(g.edges)
    for u in range(n):
        edges.extend((n + u, w) for w in g.nbr[u])
    edges.extend((2 * n, n + u) for u in range(n))
    return build_graph(2 * n + 1, edges)


def schlafli_complement() -> Graph:
    """The 27-vertex complement of the Schlafli graph, srg(27, 10, 1, 5).

    Built from the double-six labelling of the 27 lines on a cubic surface:
    vertices a1..a6 (ids 0..5), b1..b6 (ids 6..11) and c_ij for i<j
    (ids 12..26, lexicographic).  a_i ~ b_j iff i != j; a_i ~ c_jk and
    b_i ~ c_jk iff i is one of j,k; c_ij ~ c_kl iff {i,j} and {k,l} are
    disjoint.
    """
    pairs = [(i, j) for i in range(1, 7) for j in range(i + 1, 7)]
    c_id = {pq: 12 + k for k, pq in enumerate(pairs)}
    edges = []
    for i in range(1, 7):
        for j in range(1, 7):
            if i != j:
                edges.append((i - 1, 6 + j - 1))
    for (j, k), cid in c_id.items():
        for i in (j, k):
            edges.append((i - 1, cid))
            edges.append((6 + i - 1, cid))
    for (j, k), cid in c_id.items():
        for (l, m), did in c_id.items():
            if cid < did and not ({j, k} & {l, m}):
                edges.append((cid, did))
    return build_graph(27, edges)


# ---------------------------------------------------------------------------
# seeded random class members
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RandomSpec:
    """Deterministic recipe for a random (P6, diamond)-free graph."""

    n: int
    p: float
    seed: int


class SplitMix64:
    """SplitMix64 generator (portable 64-bit stream).

    State update: s += 0x9E3779B97F4A7C15 (mod 2^64); output mixes
    z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
    z *= 0x94D049BB133111EB; z ^= z >> 31.  ``next_float`` maps the top 53
    bits into [0, 1) as (z >> 11) * 2^-53.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def next_float(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53


def random_class_graph(spec: RandomSpec) -> Graph:
    """Seeded random member of the (P6, diamond)-free class.

    Edges are sampled independently with probability p over pairs (i, j),
    i < j, in lexicographic order.  While a P6 or diamond remains (P6
    searched first), the highest-id vertex of the found witness is deleted
    and the graph densely renumbered; the class is hereditary, so deletion
    repairs monotonically.  The result has at most n vertices.
    """
    rng = SplitMix64(spec.seed)
    edges = [
        (i, j)
        for i in range(spec.n)
        for j in range(i + 1, spec.n)
        if rng.next_float() < spec.p
    ]
    g = build_graph(spec.n, edges)
    while True:
        w = find_induced_path_bits(g.bits, g.n, 6)
        if w is None:
            w = find_diamond_bits(g.bits, g.n)
        if w is None:
            return g
        doomed = max(w)
        keep = [v for v in range(g.n) if v != doomed]
        g = induced_subgraph(g, keep).graph
