"""Partition of a (P6, diamond)-free graph around an induced C5.

Every vertex outside the 5-cycle Q = (v1..v5) is classified by its
neighbourhood inside Q (indices mod 5):

  A_i       sees exactly {v_i}
  B_{i,i+1} sees exactly {v_i, v_{i+1}}
  C_{i,i+2} sees exactly {v_i, v_{i+2}}
  F_i       sees exactly {v_i, v_{i-2}, v_{i+2}}
  Z         sees nothing in Q

Diamond-freeness makes this exhaustive: any other neighbourhood contains
three consecutive cycle vertices and therefore induces a diamond with Q.
The module also verifies the 21 structural facts the colouring cases rely
on, and realizes the dihedral symmetries (rotation, reflection) the case
analysis invokes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet, components_within
from .patterns import PatternWitness


class PartitionError(ValueError):
    """Invalid C5 partition input; carries a witness when one exists."""

    def __init__(self, message: str, witness: PatternWitness | None = None):
        super().__init__(message)
        self.witness = witness


def mod5(i: int) -> int:
    """Cyclic index arithmetic on 1..5."""
    return (i - 1) % 5 + 1


@dataclass(frozen=True)
class C5Partition:
    """The sets Q, A_i, B_{i,i+1}, C_{i,i+2}, F_i, Z as a total partition.

    Internal tuples are 0-indexed; the accessors take the 1-based cyclic
    index used throughout the case analysis (any integer is reduced mod 5).
    ``b[j]`` stores B_{j+1, j+2} and ``c[j]`` stores C_{j+1, j+3}.
    """

    q: tuple[int, int, int, int, int]
    a: tuple[VertexSet, VertexSet, VertexSet, VertexSet, VertexSet]
    b: tuple[VertexSet, VertexSet, VertexSet, VertexSet, VertexSet]
    c: tuple[VertexSet, VertexSet, VertexSet, VertexSet, VertexSet]
    f: tuple[VertexSet, VertexSet, VertexSet, VertexSet, VertexSet]
    z: VertexSet

    def v(self, i: int) -> int:
        return self.q[mod5(i) - 1]

    def A(self, i: int) -> VertexSet:
        return self.a[mod5(i) - 1]

    def B(self, i: int) -> VertexSet:
        """B_{i,i+1}."""
        return self.b[mod5(i) - 1]

    def C(self, i: int) -> VertexSet:
        """C_{i,i+2}."""
        return self.c[mod5(i) - 1]

    def F(self, i: int) -> VertexSet:
        return self.f[mod5(i) - 1]

    @property
    def a_union(self) -> VertexSet:
        return frozenset().union(*self.a)

    @property
    def b_union(self) -> VertexSet:
        return frozenset().union(*self.b)

    @property
    def c_union(self) -> VertexSet:
        return frozenset().union(*self.c)

    @property
    def f_union(self) -> VertexSet:
        return frozenset().union(*self.f)

    def to_json_dict(self) -> dict:
        return {
            "q": list(self.q),
            "a": {str(i): sorted(self.A(i)) for i in range(1, 6)},
            "b": {f"{i},{mod5(i + 1)}": sorted(self.B(i)) for i in range(1, 6)},
            "c": {f"{i},{mod5(i + 2)}": sorted(self.C(i)) for i in range(1, 6)},
            "f": {str(i): sorted(self.F(i)) for i in range(1, 6)},
            "z": sorted(self.z),
        }


def _check_induced_c5(g: Graph, q: tuple[int, ...]) -> None:
    if len(q) != 5 or len(set(q)) != 5:
        raise PartitionError(f"Q must name five distinct vertices, got {q}")
    for v in q:
        if not (0 <= v < g.n):
            raise PartitionError(f"Q vertex {v} outside 0..{g.n - 1}")
    for i in range(5):
        if not g.adjacent(q[i], q[(i + 1) % 5]):
            raise PartitionError(
                f"Q is not an induced C5: missing edge ({q[i]},{q[(i + 1) % 5]})"
            )
        if g.adjacent(q[i], q[(i + 2) % 5]):
            raise PartitionError(
                f"Q is not an induced C5: chord ({q[i]},{q[(i + 2) % 5]})"
            )


def build_partition(g: Graph, q: tuple[int, int, int, int, int]) -> C5Partition:
    """Classify every vertex outside Q by its Q-neighbourhood.

    Raises PartitionError if Q is not an induced C5 in the given cyclic
    order, or (with a diamond witness) if some vertex's Q-neighbourhood
    contains three consecutive cycle vertices, which cannot happen in a
    diamond-free graph.
    """
    _check_induced_c5(g, q)
    qset = set(q)
    a = [set() for _ in range(5)]
    b = [set() for _ in range(5)]
    c = [set() for _ in range(5)]
    f = [set() for _ in range(5)]
    z: set[int] = set()
    for u in range(g.n):
        if u in qset:
            continue
        hits = frozenset(i for i in range(1, 6) if g.adjacent(u, q[i - 1]))
        placed = _classify(hits)
        if placed is None:
            # three consecutive cycle vertices among the neighbours force a
            # diamond {u, v_i, v_{i+1}, v_{i+2}} (spine u v_{i+1})
            i = next(
                i
                for i in range(1, 6)
                if {i, mod5(i + 1), mod5(i + 2)} <= hits
            )
            witness = PatternWitness(
                "diamond",
                (u, q[mod5(i + 1) - 1], q[i - 1], q[mod5(i + 2) - 1]),
            )
            raise PartitionError(
                f"vertex {u} sees {sorted(hits)} in Q, which is no valid "
                "category; the graph is not diamond-free",
                witness,
            )
        kind, idx = placed
        if kind == "Z":
            z.add(u)
        else:
            {"A": a, "B": b, "C": c, "F": f}[kind][idx - 1].add(u)
    fz = frozenset
    return C5Partition(
        q=tuple(q),
        a=tuple(fz(s) for s in a),
        b=tuple(fz(s) for s in b),
        c=tuple(fz(s) for s in c),
        f=tuple(fz(s) for s in f),
        z=fz(z),
    )


def _classify(hits: frozenset[int]) -> tuple[str, int] | None:
    """Map a Q-neighbourhood (set of indices 1..5) to its category."""
    k = len(hits)
    if k == 0:
        return ("Z", 0)
    if k == 1:
        return ("A", next(iter(hits)))
    if k == 2:
        i, j = sorted(hits)
        if mod5(i + 1) == j:
            return ("B", i)
        if mod5(j + 1) == i:  # pair (1, 5) wraps: B_{5,1}
            return ("B", j)
        if mod5(i + 2) == j:
            return ("C", i)
        return ("C", j)  # pair at distance 2 the other way round, e.g. (1, 4)
    if k == 3:
        for i in hits:
            if hits == {i, mod5(i - 2), mod5(i + 2)}:
                return ("F", i)
        return None
    return None


# ---------------------------------------------------------------------------
# dihedral relabellings
# ---------------------------------------------------------------------------

def rotate_partition(g: Graph, p: C5Partition, r: int) -> C5Partition:
    """Shift all indices up by r: the old v_j becomes the new v_{j+r}."""
    new_q = tuple(p.q[(j - r) % 5] for j in range(5))
    return build_partition(g, new_q)


def apply_reflection(g: Graph, p: C5Partition, axis: int) -> C5Partition:
    """Relabel under the reflection fixing v_axis (v_{axis+t} <-> v_{axis-t}).

    An involution: reflecting twice restores the original labelling.
    """
    a0 = mod5(axis) - 1
    new_q = tuple(p.q[(2 * a0 - j) % 5] for j in range(5))
    return build_partition(g, new_q)


def nonempty_b_indices(p: C5Partition) -> list[int]:
    return [i for i in range(1, 6) if p.B(i)]


def property5_holds(p: C5Partition) -> bool:
    """B = B_{i,i+1} union B_{i+2,i+3} for some i, i.e. at most two nonempty
    B-sets and, if two, at cyclic index distance 2."""
    idx = nonempty_b_indices(p)
    if len(idx) <= 1:
        return True
    if len(idx) != 2:
        return False
    d = (idx[1] - idx[0]) % 5
    return d in (2, 3)


def normalize_rotation(g: Graph, p: C5Partition) -> C5Partition:
    """Rotate indices so that all of B lies in B_{2,3} union B_{4,5}.

    Identity when B is empty.  Raises PartitionError when property (5)
    fails, since no rotation can work then.
    """
    if not property5_holds(p):
        raise PartitionError(
            f"property (5) violated: nonempty B-sets at {nonempty_b_indices(p)}"
        )
    idx = nonempty_b_indices(p)
    if not idx:
        return p
    if len(idx) == 1:
        anchor = idx[0]
    else:
        anchor = idx[0] if mod5(idx[0] + 2) == idx[1] else idx[1]
    r = (2 - anchor) % 5
    out = p if r == 0 else rotate_partition(g, p, r)
    assert set(nonempty_b_indices(out)) <= {2, 4}
    return out


# ---------------------------------------------------------------------------
# the 21 structural properties
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PropertyCheck:
    holds: bool
    witness: tuple[int, ...] | None = None
    detail: str = ""


@dataclass(frozen=True)
class PropertyReport:
    checks: dict[int, PropertyCheck]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks.values())

    def violated(self) -> list[int]:
        return sorted(i for i, c in self.checks.items() if not c.holds)

    def to_json_dict(self) -> dict:
        out = {}
        for i in sorted(self.checks):
            c = self.checks[i]
            entry: dict = {"holds": c.holds}
            if not c.holds:
                entry["witness"] = list(c.witness or ())
                entry["detail"] = c.detail
            out[str(i)] = entry
        return out


def _anti_complete(g: Graph, xs, ys) -> tuple[int, int] | None:
    for x in sorted(xs):
        for y in sorted(ys):
            if x != y and g.adjacent(x, y):
                return (x, y)
    return None


def _complete(g: Graph, xs, ys) -> tuple[int, int] | None:
    for x in sorted(xs):
        for y in sorted(ys):
            if x != y and not g.adjacent(x, y):
                return (x, y)
    return None


def _non_clique_pair(g: Graph, xs) -> tuple[int, int] | None:
    xs = sorted(xs)
    for i, x in enumerate(xs):
        for y in xs[i + 1 :]:
            if not g.adjacent(x, y):
                return (x, y)
    return None


def _edge_within(g: Graph, xs) -> tuple[int, int] | None:
    xs = sorted(xs)
    for i, x in enumerate(xs):
        for y in xs[i + 1 :]:
            if g.adjacent(x, y):
                return (x, y)
    return None


def verify_properties(g: Graph, p: C5Partition) -> PropertyReport:
    """Evaluate the 21 structural properties literally.

    Conditional properties are judged only when their hypothesis holds.
    Each violation carries a minimal vertex witness plus a one-line detail
    naming the quantified objects.  Violations are results, not errors.
    """
    checks: dict[int, PropertyCheck] = {}

    def ok(i: int) -> None:
        checks[i] = PropertyCheck(True)

    def bad(i: int, witness: tuple[int, ...], detail: str) -> None:
        if i not in checks or checks[i].holds:
            checks[i] = PropertyCheck(False, witness, detail)

    # (1) each component of A_i is a clique
    for i in range(1, 6):
        for comp in components_within(g, p.A(i)):
            w = _non_clique_pair(g, comp)
            if w:
                bad(1, w, f"non-adjacent pair in one component of A_{i}")
    checks.setdefault(1, PropertyCheck(True))

    # (2) A_i and A_{i+1} anti-complete
    for i in range(1, 6):
        w = _anti_complete(g, p.A(i), p.A(i + 1))
        if w:
            bad(2, w, f"edge between A_{i} and A_{mod5(i + 1)}")
    checks.setdefault(2, PropertyCheck(True))

    # (3) A_i and A_{i+2} complete
    for i in range(1, 6):
        w = _complete(g, p.A(i), p.A(i + 2))
        if w:
            bad(3, w, f"missing edge between A_{i} and A_{mod5(i + 2)}")
    checks.setdefault(3, PropertyCheck(True))

    # (4) each B_{i,i+1} is a clique
    for i in range(1, 6):
        w = _non_clique_pair(g, p.B(i))
        if w:
            bad(4, w, f"non-adjacent pair in B_{{{i},{mod5(i + 1)}}}")
    checks.setdefault(4, PropertyCheck(True))

    # (5) B is contained in two B-sets at index distance 2
    if property5_holds(p):
        ok(5)
    else:
        idx = nonempty_b_indices(p)
        wit = tuple(sorted(p.B(i))[0] for i in idx)
        bad(5, wit, f"nonempty B-sets at indices {idx}")

    # (6) B_{i,i+1} anti-complete to A_i and A_{i+1}
    for i in range(1, 6):
        w = _anti_complete(g, p.B(i), p.A(i) | p.A(i + 1))
        if w:
            bad(6, w, f"edge between B_{{{i},{mod5(i + 1)}}} and A_{i}/A_{mod5(i + 1)}")
    checks.setdefault(6, PropertyCheck(True))

    # (7) B_{i,i+1} complete to A_{i-1} and A_{i+2}
    for i in range(1, 6):
        w = _complete(g, p.B(i), p.A(i - 1) | p.A(i + 2))
        if w:
            bad(7, w, f"missing edge between B_{{{i},{mod5(i + 1)}}} and A_{mod5(i - 1)}/A_{mod5(i + 2)}")
    checks.setdefault(7, PropertyCheck(True))

    # (8) each C_{i,i+2} is stable
    for i in range(1, 6):
        w = _edge_within(g, p.C(i))
        if w:
            bad(8, w, f"edge inside C_{{{i},{mod5(i + 2)}}}")
    checks.setdefault(8, PropertyCheck(True))

    # (9) each c in C_{i,i+2} complete or anti-complete to each component of
    #     A_i and A_{i+2}
    for i in range(1, 6):
        for side in (i, mod5(i + 2)):
            comps = components_within(g, p.A(side))
            for cvx in sorted(p.C(i)):
                for comp in comps:
                    hit = [x for x in sorted(comp) if g.adjacent(cvx, x)]
                    if hit and len(hit) != len(comp):
                        miss = next(x for x in sorted(comp) if not g.adjacent(cvx, x))
                        bad(9, (cvx, hit[0], miss), f"C_{{{i},{mod5(i + 2)}}} vertex splits a component of A_{side}")
    checks.setdefault(9, PropertyCheck(True))

    # (10) each c in C_{i,i+2} has at most one neighbour in each component of
    #      A_{i+1}, A_{i+3}, A_{i+4}
    for i in range(1, 6):
        for side in (mod5(i + 1), mod5(i + 3), mod5(i + 4)):
            comps = components_within(g, p.A(side))
            for cvx in sorted(p.C(i)):
                for comp in comps:
                    hit = [x for x in sorted(comp) if g.adjacent(cvx, x)]
                    if len(hit) > 1:
                        bad(10, (cvx, hit[0], hit[1]), f"C_{{{i},{mod5(i + 2)}}} vertex with two neighbours in a component of A_{side}")
    checks.setdefault(10, PropertyCheck(True))

    # (11) each c in C_{i,i+2} anti-complete to each non-trivial component of A_{i+1}
    for i in range(1, 6):
        comps = [c_ for c_ in components_within(g, p.A(i + 1)) if len(c_) > 1]
        for cvx in sorted(p.C(i)):
            for comp in comps:
                hit = [x for x in sorted(comp) if g.adjacent(cvx, x)]
                if hit:
                    bad(11, (cvx, hit[0]), f"C_{{{i},{mod5(i + 2)}}} vertex adjacent to a non-trivial component of A_{mod5(i + 1)}")
    checks.setdefault(11, PropertyCheck(True))

    # (12) C_{i,i+2} anti-complete to B_{j,j+1} for j != i+3; at most one
    #      neighbour in B_{i+3,i+4}
    for i in range(1, 6):
        for j in range(1, 6):
            if j == mod5(i + 3):
                for cvx in sorted(p.C(i)):
                    hit = [x for x in sorted(p.B(j)) if g.adjacent(cvx, x)]
                    if len(hit) > 1:
                        bad(12, (cvx, hit[0], hit[1]), f"C_{{{i},{mod5(i + 2)}}} vertex with two neighbours in B_{{{j},{mod5(j + 1)}}}")
            else:
                w = _anti_complete(g, p.C(i), p.B(j))
                if w:
                    bad(12, w, f"edge between C_{{{i},{mod5(i + 2)}}} and B_{{{j},{mod5(j + 1)}}}")
    checks.setdefault(12, PropertyCheck(True))

    # (13) each F_i has at most one vertex; F is stable
    for i in range(1, 6):
        if len(p.F(i)) > 1:
            fs = sorted(p.F(i))
            bad(13, (fs[0], fs[1]), f"two vertices in F_{i}")
    w = _edge_within(g, p.f_union)
    if w:
        bad(13, w, "edge inside F")
    checks.setdefault(13, PropertyCheck(True))

    # (14) F_i anti-complete to A_{i+2} and A_{i+3}
    for i in range(1, 6):
        w = _anti_complete(g, p.F(i), p.A(i + 2) | p.A(i + 3))
        if w:
            bad(14, w, f"edge between F_{i} and A_{mod5(i + 2)}/A_{mod5(i + 3)}")
    checks.setdefault(14, PropertyCheck(True))

    # (15) each f in F_i complete or anti-complete to each component of A_i
    for i in range(1, 6):
        comps = components_within(g, p.A(i))
        for fvx in sorted(p.F(i)):
            for comp in comps:
                hit = [x for x in sorted(comp) if g.adjacent(fvx, x)]
                if hit and len(hit) != len(comp):
                    miss = next(x for x in sorted(comp) if not g.adjacent(fvx, x))
                    bad(15, (fvx, hit[0], miss), f"F_{i} vertex splits a component of A_{i}")
    checks.setdefault(15, PropertyCheck(True))

    # (16) each f in F_i has at most one neighbour in each component of
    #      A_{i+1} and A_{i+4}
    for i in range(1, 6):
        for side in (mod5(i + 1), mod5(i + 4)):
            comps = components_within(g, p.A(side))
            for fvx in sorted(p.F(i)):
                for comp in comps:
                    hit = [x for x in sorted(comp) if g.adjacent(fvx, x)]
                    if len(hit) > 1:
                        bad(16, (fvx, hit[0], hit[1]), f"F_{i} vertex with two neighbours in a component of A_{side}")
    checks.setdefault(16, PropertyCheck(True))

    # (17) F_i anti-complete to B_{j,j+1} for j != i+2, complete for j = i+2
    for i in range(1, 6):
        for j in range(1, 6):
            if j == mod5(i + 2):
                w = _complete(g, p.F(i), p.B(j))
                if w:
                    bad(17, w, f"missing edge between F_{i} and B_{{{j},{mod5(j + 1)}}}")
            else:
                w = _anti_complete(g, p.F(i), p.B(j))
                if w:
                    bad(17, w, f"edge between F_{i} and B_{{{j},{mod5(j + 1)}}}")
    checks.setdefault(17, PropertyCheck(True))

    # (18) F_i anti-complete to C_{j,j+2} for j != i-1
    for i in range(1, 6):
        for j in range(1, 6):
            if j == mod5(i - 1):
                continue
            w = _anti_complete(g, p.F(i), p.C(j))
            if w:
                bad(18, w, f"edge between F_{i} and C_{{{j},{mod5(j + 2)}}}")
    checks.setdefault(18, PropertyCheck(True))

    # (19) if A_i is not stable then A_{i+2}, A_{i+3}, B_{i+1,i+2}, B_{i-2,i-1}
    #      are all empty
    for i in range(1, 6):
        e = _edge_within(g, p.A(i))
        if e is None:
            continue
        for label, s in (
            (f"A_{mod5(i + 2)}", p.A(i + 2)),
            (f"A_{mod5(i + 3)}", p.A(i + 3)),
            (f"B_{{{mod5(i + 1)},{mod5(i + 2)}}}", p.B(i + 1)),
            (f"B_{{{mod5(i - 2)},{mod5(i - 1)}}}", p.B(i - 2)),
        ):
            if s:
                x = sorted(s)[0]
                bad(19, (e[0], e[1], x), f"A_{i} has edge but {label} is nonempty")
    checks.setdefault(19, PropertyCheck(True))

    # (20) if A_i is nonempty then B_{i+1,i+2} and B_{i-2,i-1} have at most
    #      one vertex each
    for i in range(1, 6):
        if not p.A(i):
            continue
        for label, s in (
            (f"B_{{{mod5(i + 1)},{mod5(i + 2)}}}", p.B(i + 1)),
            (f"B_{{{mod5(i - 2)},{mod5(i - 1)}}}", p.B(i - 2)),
        ):
            if len(s) > 1:
                xs = sorted(s)
                bad(20, (sorted(p.A(i))[0], xs[0], xs[1]), f"A_{i} nonempty but {label} has two vertices")
    checks.setdefault(20, PropertyCheck(True))

    # (21) Z anti-complete to A and B
    w = _anti_complete(g, p.z, p.a_union | p.b_union)
    if w:
        bad(21, w, "edge between Z and A/B")
    checks.setdefault(21, PropertyCheck(True))

    return PropertyReport(checks)
