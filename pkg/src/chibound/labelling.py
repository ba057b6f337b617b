"""Search for the structural labellings of the Grotzsch graph.

A label assigns each vertex of the Grotzsch graph H a position relative to
a 5-cycle Q: the numeric label i means "the vertex lies in F_i" (adjacent
to v_i, v_{i-2}, v_{i+2}) and the two-digit label ij means "the vertex lies
in the C-set with Q-neighbourhood {v_i, v_j}" (the five pairs at cyclic
distance 2).  A total labelling is valid when the 16-vertex union of H, Q
and the implied cross edges is (P6, diamond)-free.

The search is domain propagation plus backtracking.  Three reduction rules
shrink neighbour domains around decided vertices; each is a restatement of
a structural fact about C/F sets (C-sets are stable, F-sets are singletons
and meet only one C-set, two common C-neighbours force a diamond).
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .graph import Graph, build_graph
from .patterns import find_diamond_bits, find_induced_path_bits

NUMERIC_LABELS = (1, 2, 3, 4, 5)
PAIR_LABELS = (13, 14, 24, 25, 35)
ALL_LABELS = frozenset(NUMERIC_LABELS) | frozenset(PAIR_LABELS)

_PAIR_DIGITS = {13: (1, 3), 14: (1, 4), 24: (2, 4), 25: (2, 5), 35: (3, 5)}
_PAIR_FROM_SET = {frozenset(d): p for p, d in _PAIR_DIGITS.items()}
# the pair label of the C-set C_{i,i+2}
_PAIR_INDEX = {13: 1, 24: 2, 35: 3, 14: 4, 25: 5}

LabelDomainMap = dict[int, frozenset[int]]
Labelling = tuple[int, ...]


def _mod5(i: int) -> int:
    return (i - 1) % 5 + 1


# Figure-numbered Grotzsch graph: 0 is the hub, 1..5 the inner layer,
# 6..10 the outer 5-cycle.
GROETZSCH_EDGES: tuple[tuple[int, int], ...] = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 7), (1, 10),
    (2, 6), (2, 8),
    (3, 7), (3, 9),
    (4, 8), (4, 10),
    (5, 6), (5, 9),
    (6, 7), (7, 8), (8, 9), (9, 10), (6, 10),
)

N_H = 11
_Q_IDS = tuple(N_H + i for i in range(5))  # v1..v5 get ids 11..15


def groetzsch_graph() -> Graph:
    """The 11-vertex, 20-edge Grotzsch graph with its standard numbering."""
    return build_graph(N_H, GROETZSCH_EDGES)


_H = groetzsch_graph()
_H_NBRS = tuple(tuple(sorted(_H.nbr[v])) for v in range(N_H))


def label_q_indices(label: int) -> tuple[int, ...]:
    """The Q indices (1..5) a vertex with this label is adjacent to."""
    if label in _PAIR_DIGITS:
        return _PAIR_DIGITS[label]
    if label in NUMERIC_LABELS:
        return tuple(sorted({label, _mod5(label - 2), _mod5(label + 2)}))
    raise ValueError(f"unknown label {label}")


_CROSS_MASK = {
    lab: sum(1 << (N_H + i - 1) for i in label_q_indices(lab)) for lab in ALL_LABELS
}

_BASE_BITS = [0] * (N_H + 5)
for _u, _v in GROETZSCH_EDGES:
    _BASE_BITS[_u] |= 1 << _v
    _BASE_BITS[_v] |= 1 << _u
for _i in range(5):
    _a, _b = _Q_IDS[_i], _Q_IDS[(_i + 1) % 5]
    _BASE_BITS[_a] |= 1 << _b
    _BASE_BITS[_b] |= 1 << _a
_Q_MASK = sum(1 << q for q in _Q_IDS)


def realize_labelling(labels: Mapping[int, int]) -> Graph:
    """The 16-vertex union of H, Q (ids 11..15 for v1..v5) and cross edges."""
    edges = list(GROETZSCH_EDGES)
    for i in range(5):
        edges.append((_Q_IDS[i], _Q_IDS[(i + 1) % 5]))
    for v, lab in labels.items():
        for i in label_q_indices(lab):
            edges.append((v, N_H + i - 1))
    return build_graph(N_H + 5, edges)


def partial_realization_ok(assigned: Mapping[int, int]) -> bool:
    """(P6, diamond)-freeness of the realization restricted to the labelled
    vertices plus Q.

    Sound as a pruning test: completing a labelling only adds edges incident
    to unlabelled vertices, so an induced P6 or diamond among labelled
    vertices and Q can never disappear.
    """
    bits = list(_BASE_BITS)
    universe = _Q_MASK
    for v, lab in assigned.items():
        universe |= 1 << v
        m = _CROSS_MASK[lab]
        bits[v] |= m
        w = m
        while w:
            low = w & -w
            bits[low.bit_length() - 1] |= 1 << v
            w ^= low
    masked = [bits[i] & universe if universe >> i & 1 else 0 for i in range(N_H + 5)]
    if find_diamond_bits(masked, N_H + 5) is not None:
        return False
    return find_induced_path_bits(masked, N_H + 5, 6) is None


def is_valid_labelling(labels: Labelling | Mapping[int, int]) -> bool:
    """A total labelling is valid iff its realization is (P6, diamond)-free."""
    if not isinstance(labels, Mapping):
        labels = dict(enumerate(labels))
    if set(labels) != set(range(N_H)):
        raise ValueError("labelling must assign all 11 vertices")
    return partial_realization_ok(labels)


def all_c_labels_used(labels: Labelling | Iterable[int]) -> bool:
    """True iff all five pair labels occur, i.e. the labelling needs a
    vertex from every C-set."""
    present = set(labels)
    return all(p in present for p in PAIR_LABELS)


# ---------------------------------------------------------------------------
# reduction rules
# ---------------------------------------------------------------------------

def _rule1_allowed(pair: int) -> frozenset[int]:
    """Neighbours of a vertex fixed to pair label i(i+2): any other pair
    label, or the numeric label i+1."""
    i = _PAIR_INDEX[pair]
    return (frozenset(PAIR_LABELS) - {pair}) | {_mod5(i + 1)}


def _rule2_allowed(num: int) -> frozenset[int]:
    """Neighbours of a vertex fixed to numeric label i: only (i-1)(i+1)."""
    return frozenset({_PAIR_FROM_SET[frozenset({_mod5(num - 1), _mod5(num + 1)})]})


def _rule3_removed(pair: int) -> frozenset[int]:
    """A vertex with two neighbours fixed to i(i+2) loses every label that
    mentions i or i+2."""
    i = _PAIR_INDEX[pair]
    return frozenset(
        {
            pair,
            _PAIR_FROM_SET[frozenset({_mod5(i - 2), i})],
            _PAIR_FROM_SET[frozenset({_mod5(i + 2), _mod5(i + 4)})],
            i,
            _mod5(i + 2),
        }
    )


def apply_rules(domains: Mapping[int, Iterable[int]]) -> LabelDomainMap:
    """Run the three reduction rules to a fixpoint.

    Domains only shrink, and no rule removes a label that extends to a valid
    labelling, so the fixpoint preserves the solution set.  Empty domains
    are legitimate outputs (dead branches), not errors.
    """
    cur: list[set[int]] = []
    for v in range(N_H):
        d = set(domains[v])
        if not d <= ALL_LABELS:
            raise ValueError(f"domain of vertex {v} contains unknown labels: {d - ALL_LABELS}")
        cur.append(d)
    changed = True
    while changed:
        changed = False
        for v in range(N_H):
            if len(cur[v]) != 1:
                continue
            lab = next(iter(cur[v]))
            allowed = _rule1_allowed(lab) if lab in _PAIR_DIGITS else _rule2_allowed(lab)
            for u in _H_NBRS[v]:
                if not cur[u] <= allowed:
                    cur[u] &= allowed
                    changed = True
        for v in range(N_H):
            fixed_pairs = [
                next(iter(cur[u]))
                for u in _H_NBRS[v]
                if len(cur[u]) == 1 and next(iter(cur[u])) in _PAIR_DIGITS
            ]
            for pair in set(fixed_pairs):
                if fixed_pairs.count(pair) >= 2:
                    removed = _rule3_removed(pair)
                    if cur[v] & removed:
                        cur[v] -= removed
                        changed = True
    return {v: frozenset(cur[v]) for v in range(N_H)}


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def paper_initial_domains() -> LabelDomainMap:
    """Vertex 0 restricted to {1, 25} (a symmetry normalization), the rest
    unrestricted."""
    d = {v: ALL_LABELS for v in range(N_H)}
    d[0] = frozenset({1, 25})
    return d


def enumerate_labellings(domains: Mapping[int, Iterable[int]]) -> tuple[Labelling, ...]:
    """All valid labellings with each vertex's label inside its domain.

    Backtracking: pick one branch vertex (smallest domain of size >= 2, ties
    by vertex number), try each of its labels with rule propagation, and
    union the branches.  Total assignments are accepted only after the full
    validity test on the realization.  Output is sorted lexicographically
    (labels compare as plain integers: 1 < 2 < ... < 5 < 13 < ... < 35).
    """
    start = {v: frozenset(domains[v]) for v in range(N_H)}
    found: set[Labelling] = set()

    def search(cur: LabelDomainMap) -> None:
        sizes = [len(cur[v]) for v in range(N_H)]
        if any(s == 0 for s in sizes):
            return
        if all(s == 1 for s in sizes):
            lab = tuple(next(iter(cur[v])) for v in range(N_H))
            if is_valid_labelling(lab):
                found.add(lab)
            return
        branch = min(
            (v for v in range(N_H) if sizes[v] >= 2), key=lambda v: (sizes[v], v)
        )
        for lab in sorted(cur[branch]):
            nxt = dict(cur)
            nxt[branch] = frozenset({lab})
            search(apply_rules(nxt))

    search(start)
    return tuple(sorted(found))


def format_labelling(labels: Labelling) -> str:
    """Render in the array-of-singletons notation, e.g. [[25], [13], ...]."""
    return "[[" + "], [".join(str(x) for x in labels) + "]]"
