"""Reduction steps for the colouring driver: comparable-vertex removal,
clique-cutset splitting, and colour recombination across a cutset.

The trace records every reduction in post-order so a single left-to-right
pass with a stack can replay it into a total colouring without re-running
any search (see ``replay_trace``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .graph import (
    Coloring,
    Graph,
    VertexSet,
    components_within,
    is_connected,
)
from .oracles import maximal_cliques


def find_comparable_pair(g: Graph) -> tuple[int, int] | None:
    """Least non-adjacent pair (u, v) with N(v) a subset of N(u).

    Returned as (u, v) where v is the dominated vertex; "least" means the
    smallest (v, u) in lexicographic order, so ties between equal
    neighbourhoods resolve to the smaller dominated vertex.
    """
    for v in range(g.n):
        nv = g.bits[v]
        for u in range(g.n):
            if u == v or g.adjacent(u, v):
                continue
            if nv & ~g.bits[u] == 0:
                return (u, v)
    return None


def find_clique_cutset(
    g: Graph,
) -> tuple[VertexSet, tuple[VertexSet, VertexSet]] | None:
    """A clique whose removal disconnects ``g``, or None if ``g`` is an atom.

    Candidates are exactly the subsets of maximal cliques (every clique is
    one), tried by ascending size then lexicographic order, so the result is
    deterministic and absence certifies atomhood.  When the removal leaves
    more than two components, the second part aggregates all but the first.

    Requires a connected input.
    """
    if not is_connected(g):
        raise ValueError("find_clique_cutset requires a connected graph")
    if g.n <= 1:
        return None
    seen: set[tuple[int, ...]] = set()
    candidates: list[tuple[int, ...]] = []
    for mc in maximal_cliques(g):
        k = len(mc)
        for mask in range(1, 1 << k):
            sub = tuple(mc[i] for i in range(k) if mask >> i & 1)
            if sub not in seen:
                seen.add(sub)
                candidates.append(sub)
    candidates.sort(key=lambda t: (len(t), t))
    all_vertices = set(range(g.n))
    for cand in candidates:
        rest = all_vertices.difference(cand)
        if len(rest) < 2:
            continue
        parts = components_within(g, rest)
        if len(parts) >= 2:
            side1 = parts[0]
            side2 = frozenset().union(*parts[1:])
            return frozenset(cand), (side1, side2)
    return None


def permute_to_agree(c_base: Coloring, c_other: Coloring, cutset: VertexSet) -> Coloring:
    """Rename ``c_other``'s colours by a palette bijection so it matches
    ``c_base`` on the cutset.  The output palette is the max of the two.
    """
    palette = max(c_base.palette, c_other.palette)
    mapping: dict[int, int] = {}
    for v in sorted(cutset):
        src = c_other.colors[v]
        dst = c_base.colors[v]
        if mapping.get(src, dst) != dst:
            raise ValueError("cutset colours do not admit a consistent renaming")
        mapping[src] = dst
    targets = set(mapping.values())
    if len(targets) != len(mapping):
        raise ValueError("cutset is not rainbow in the base colouring")
    free_dst = [c for c in range(1, palette + 1) if c not in targets]
    for src in range(1, palette + 1):
        if src not in mapping:
            mapping[src] = free_dst.pop(0)
    return Coloring({v: mapping[c] for v, c in c_other.colors.items()}, palette)


def merge_colorings_across_cutset(
    g: Graph, c1: Coloring, c2: Coloring, cutset: VertexSet
) -> Coloring:
    """Combine colourings of two blocks that overlap exactly on a clique.

    ``c1`` covers V1 + cutset and ``c2`` covers V2 + cutset; the output
    agrees with c1 everywhere and with a palette-permuted c2 on its block.
    Inputs must be proper on their blocks and rainbow on the cutset.
    """
    for name, c in (("c1", c1), ("c2", c2)):
        for v in cutset:
            if v not in c.colors:
                raise ValueError(f"{name} does not colour cutset vertex {v}")
        for u in c.colors:
            for w in g.nbr[u]:
                if w in c.colors and w > u and c.colors[u] == c.colors[w]:
                    raise ValueError(
                        f"{name} is improper: edge ({u},{w}) is monochromatic"
                    )
        if any(not (1 <= col <= c.palette) for col in c.colors.values()):
            raise ValueError(f"{name} uses a colour outside 1..{c.palette}")
    cut_cols = {c1.colors[v] for v in cutset}
    if len(cut_cols) != len(cutset):
        raise ValueError("c1 does not colour the cutset with distinct colours")
    if len({c2.colors[v] for v in cutset}) != len(cutset):
        raise ValueError("c2 does not colour the cutset with distinct colours")
    shifted = permute_to_agree(c1, c2, cutset)
    merged = dict(shifted.colors)
    merged.update(c1.colors)
    return Coloring(merged, max(c1.palette, c2.palette))


# ---------------------------------------------------------------------------
# decomposition trace
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComponentSplit:
    parts: tuple[tuple[int, ...], ...]

    def to_json_dict(self) -> dict:
        return {"kind": "component-split", "parts": [list(p) for p in self.parts]}


@dataclass(frozen=True)
class DominatedRemoval:
    kept: int
    removed: int

    def to_json_dict(self) -> dict:
        return {"kind": "dominated-removal", "kept": self.kept, "removed": self.removed}


@dataclass(frozen=True)
class CutsetSplit:
    cutset: tuple[int, ...]
    side1: tuple[int, ...]
    side2: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "kind": "cutset-split",
            "cutset": list(self.cutset),
            "side1": list(self.side1),
            "side2": list(self.side2),
        }


@dataclass(frozen=True)
class PerfectLeaf:
    vertices: tuple[int, ...]
    palette: int
    colors: tuple[tuple[int, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "kind": "perfect-leaf",
            "vertices": list(self.vertices),
            "palette": self.palette,
            "colors": {str(v): c for v, c in self.colors},
        }


@dataclass(frozen=True)
class ImperfectAtomLeaf:
    vertices: tuple[int, ...]
    palette: int
    colors: tuple[tuple[int, int], ...]
    method: str  # "bounded-search" (clique number <= 3) or "structural"
    case_tag: str | None = None

    def to_json_dict(self) -> dict:
        d = {
            "kind": "imperfect-atom-leaf",
            "vertices": list(self.vertices),
            "palette": self.palette,
            "colors": {str(v): c for v, c in self.colors},
            "method": self.method,
        }
        if self.case_tag is not None:
            d["case"] = self.case_tag
        return d


TraceStep = Union[
    ComponentSplit, DominatedRemoval, CutsetSplit, PerfectLeaf, ImperfectAtomLeaf
]


@dataclass(frozen=True)
class DecompositionTrace:
    """Post-order record of the reductions used to colour a graph."""

    steps: tuple[TraceStep, ...]

    def to_json_list(self) -> list[dict]:
        return [s.to_json_dict() for s in self.steps]


def replay_trace(trace: DecompositionTrace) -> Coloring:
    """Reconstruct the final colouring from the trace alone.

    Stack machine over the post-order step list: leaves push their recorded
    block colourings, DominatedRemoval extends the popped colouring by
    copying the keeper's colour, CutsetSplit merges the top two blocks, and
    ComponentSplit unions one block per part.
    """
    stack: list[Coloring] = []
    for step in trace.steps:
        if isinstance(step, (PerfectLeaf, ImperfectAtomLeaf)):
            stack.append(Coloring(dict(step.colors), step.palette))
        elif isinstance(step, DominatedRemoval):
            c = stack.pop()
            colors = dict(c.colors)
            colors[step.removed] = colors[step.kept]
            stack.append(Coloring(colors, c.palette))
        elif isinstance(step, CutsetSplit):
            c2 = stack.pop()
            c1 = stack.pop()
            shifted = permute_to_agree(c1, c2, frozenset(step.cutset))
            merged = dict(shifted.colors)
            merged.update(c1.colors)
            stack.append(Coloring(merged, max(c1.palette, c2.palette)))
        elif isinstance(step, ComponentSplit):
            colors: dict[int, int] = {}
            palette = 0
            for _ in step.parts:
                c = stack.pop()
                colors.update(c.colors)
                palette = max(palette, c.palette)
            stack.append(Coloring(colors, palette))
        else:
            raise ValueError(f"unknown trace step {step!r}")
    if len(stack) != 1:
        raise ValueError(f"trace does not reduce to one colouring ({len(stack)} left)")
    return stack[0]
