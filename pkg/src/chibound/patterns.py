"""Induced-subgraph detection for the fixed patterns this package forbids
or exploits: P6, diamond, triangle, C5, and small generic patterns.

All detectors are deterministic: among every valid witness tuple they return
the lexicographically least one.  The module-level ``*_bits`` helpers work on
raw adjacency bitmasks so that hot loops elsewhere (labelling search, random
generation) can reuse them without building Graph values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet

MAX_PATTERN_SIZE = 12


@dataclass(frozen=True)
class PatternWitness:
    """An ordered vertex tuple realizing a named pattern.

    The order encodes the isomorphism: path order for P6, cyclic order for
    C5, (u, v, x, y) for the diamond with uv the edge of the degree-3 pair
    and x, y the non-adjacent pair, and pattern-vertex order 0..h-1 for
    generic matches.
    """

    pattern: str
    vertices: tuple[int, ...]


def _bits_iter(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def find_induced_path_bits(bits: tuple[int, ...], n: int, length: int) -> tuple[int, ...] | None:
    """Lexicographically least induced path on ``length`` vertices, or None.

    Depth-first extension: the vertex at position d must be adjacent to the
    one at d-1 and non-adjacent to all at positions <= d-2.  ``banned`` holds
    the path itself plus the neighbourhoods of positions 0..d-2.
    """
    if length > n:
        return None
    full = (1 << n) - 1
    path = [0] * length

    def extend(depth: int, banned: int) -> bool:
        last = path[depth - 1]
        cand = bits[last] & ~banned & full
        for v in _bits_iter(cand):
            path[depth] = v
            if depth + 1 == length:
                return True
            if extend(depth + 1, banned | bits[last] | 1 << v):
                return True
        return False

    for a in range(n):
        path[0] = a
        if length == 1:
            return (a,)
        if extend(1, 1 << a):
            return tuple(path)
    return None


def find_induced_cycle_bits(bits: tuple[int, ...], n: int, length: int) -> tuple[int, ...] | None:
    """Lexicographically least induced cycle on ``length`` vertices, or None.

    Like the path search, except the final vertex must close onto path[0]
    and interior vertices must avoid path[0]'s neighbourhood.  ``ban_inner``
    holds the neighbourhoods of positions 1..d-2 (path[0] is kept separate
    so the closing step can require adjacency to it).
    """
    if length > n or length < 3:
        return None
    full = (1 << n) - 1
    path = [0] * length

    def extend(depth: int, ban_inner: int, path_mask: int) -> bool:
        last = path[depth - 1]
        if depth == length - 1:
            cand = bits[last] & bits[path[0]] & ~ban_inner & ~path_mask & full
            for v in _bits_iter(cand):
                path[depth] = v
                return True
            return False
        if depth == 1:
            cand = bits[last] & ~path_mask & full
        else:
            cand = bits[last] & ~ban_inner & ~bits[path[0]] & ~path_mask & full
        grow = bits[last] if depth >= 2 else 0
        for v in _bits_iter(cand):
            path[depth] = v
            if extend(depth + 1, ban_inner | grow, path_mask | 1 << v):
                return True
        return False

    for a in range(n):
        path[0] = a
        if extend(1, 0, 1 << a):
            return tuple(path)
    return None


def find_triangle_bits(bits: tuple[int, ...], n: int) -> tuple[int, int, int] | None:
    for u in range(n):
        above_u = bits[u] & ~((1 << (u + 1)) - 1)
        for v in _bits_iter(above_u):
            common = bits[u] & bits[v] & ~((1 << (v + 1)) - 1)
            for w in _bits_iter(common):
                return (u, v, w)
    return None


def find_diamond_bits(bits: tuple[int, ...], n: int) -> tuple[int, int, int, int] | None:
    """Least (u, v, x, y): uv edge, x < y non-adjacent, both complete to uv.

    Runs per-edge over common neighbourhoods, O(m * n^2) worst case, which
    matches generic 4-subset enumeration on every input.
    """
    for u in range(n):
        for v in _bits_iter(bits[u]):
            if v <= u:
                continue
            common = bits[u] & bits[v]
            if common.bit_count() < 2:
                continue
            for x in _bits_iter(common):
                rest = common & ~bits[x]
                rest &= ~((1 << (x + 1)) - 1)
                for y in _bits_iter(rest):
                    return (u, v, x, y)
    return None


def find_induced_p6(g: Graph) -> PatternWitness | None:
    t = find_induced_path_bits(g.bits, g.n, 6)
    return None if t is None else PatternWitness("P6", t)


def find_induced_c5(g: Graph) -> PatternWitness | None:
    t = find_induced_cycle_bits(g.bits, g.n, 5)
    return None if t is None else PatternWitness("C5", t)


def find_triangle(g: Graph) -> PatternWitness | None:
    t = find_triangle_bits(g.bits, g.n)
    return None if t is None else PatternWitness("triangle", t)


def find_induced_diamond(g: Graph) -> PatternWitness | None:
    t = find_diamond_bits(g.bits, g.n)
    return None if t is None else PatternWitness("diamond", t)


def contains_induced(g: Graph, h: Graph) -> PatternWitness | None:
    """Least injective map realizing ``h`` as an induced subgraph of ``g``.

    The witness tuple lists the images of h's vertices 0..h.n-1 in order.
    Patterns larger than MAX_PATTERN_SIZE vertices are rejected.
    """
    if h.n > MAX_PATTERN_SIZE:
        raise ValueError(
            f"pattern has {h.n} vertices, limit is {MAX_PATTERN_SIZE}"
        )
    if h.n > g.n:
        return None
    if h.n == 0:
        return PatternWitness("generic", ())
    image = [0] * h.n
    used_mask = 0

    def place(k: int) -> bool:
        nonlocal used_mask
        for cand in range(g.n):
            if used_mask >> cand & 1:
                continue
            ok = True
            for j in range(k):
                if h.adjacent(j, k) != g.adjacent(image[j], cand):
                    ok = False
                    break
            if not ok:
                continue
            image[k] = cand
            used_mask |= 1 << cand
            if k + 1 == h.n or place(k + 1):
                return True
            used_mask &= ~(1 << cand)
        return False

    if place(0):
        return PatternWitness("generic", tuple(image))
    return None


@dataclass(frozen=True)
class ClassResult:
    """Outcome of the (P6, diamond)-free membership test."""

    member: bool
    witness: PatternWitness | None = None


def class_membership(g: Graph) -> ClassResult:
    """(P6, diamond)-freeness, P6 checked first."""
    w = find_induced_p6(g)
    if w is not None:
        return ClassResult(False, w)
    w = find_induced_diamond(g)
    if w is not None:
        return ClassResult(False, w)
    return ClassResult(True)


_PATTERN_EDGES = {
    "P6": {(i, i + 1) for i in range(5)},
    "C5": {tuple(sorted((i, (i + 1) % 5))) for i in range(5)},
    "triangle": {(0, 1), (0, 2), (1, 2)},
    "diamond": {(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)},
}

_PATTERN_SIZE = {"P6": 6, "C5": 5, "triangle": 3, "diamond": 4}


def check_witness(g: Graph, w: PatternWitness, pattern: Graph | None = None) -> bool:
    """Independent adjacency re-check of a witness against its pattern."""
    vs = w.vertices
    if len(set(vs)) != len(vs):
        return False
    if w.pattern == "generic" or w.pattern == "Groetzsch":
        if pattern is None:
            raise ValueError("generic witness re-check needs the pattern graph")
        if len(vs) != pattern.n:
            return False
        return all(
            g.adjacent(vs[i], vs[j]) == pattern.adjacent(i, j)
            for i in range(pattern.n)
            for j in range(i + 1, pattern.n)
        )
    if w.pattern not in _PATTERN_EDGES:
        raise ValueError(f"unknown pattern name {w.pattern!r}")
    if len(vs) != _PATTERN_SIZE[w.pattern]:
        return False
    want = _PATTERN_EDGES[w.pattern]
    k = len(vs)
    return all(
        g.adjacent(vs[i], vs[j]) == ((i, j) in want)
        for i in range(k)
        for j in range(i + 1, k)
    )
