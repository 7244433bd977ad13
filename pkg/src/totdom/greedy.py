"""Greedy construction of a total dominating set in a bipartite graph.

Each side is covered independently: pick vertices of the source side one at
a time, always the one adjacent to the most still-uncovered vertices of the
opposite side (lowest index on ties), until the opposite side is covered.
The union of the X-pass and the Y-pass is a total dominating set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .bounds import closed_bound, henning_bound
from .graph import BipartiteGraph, GraphError, Side, VertexRef, min_degree


class UncoverableVertex(GraphError):
    def __init__(self, vertex: VertexRef):
        super().__init__(f"vertex {vertex!r} has no neighbors and cannot be dominated")
        self.vertex = vertex


class MinDegreeTooSmall(GraphError):
    pass


@dataclass(frozen=True)
class CoverStep:
    chosen: VertexRef
    gain: int
    uncovered_after: int


@dataclass(frozen=True)
class CoverTrace:
    steps: tuple[CoverStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def gains(self) -> list[int]:
        return [s.gain for s in self.steps]

    def gains_non_increasing(self) -> bool:
        g = self.gains
        return all(a >= b for a, b in zip(g, g[1:]))


@dataclass(frozen=True)
class TotalDominatingSet:
    members: frozenset[VertexRef]
    from_x: int
    from_y: int

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, v) -> bool:
        return v in self.members


def cover_side(g: BipartiteGraph, source: Side) -> tuple[frozenset[VertexRef], CoverTrace]:
    """Greedily choose source-side vertices whose neighborhoods cover the other side."""
    target = source.other
    src_adj = g.adjacency(source)
    tgt_adj = g.adjacency(target)
    for j, nbrs in enumerate(tgt_adj):
        if not nbrs:
            raise UncoverableVertex(VertexRef(target, j))

    # residual[u] counts uncovered target vertices adjacent to u
    residual = [len(nbrs) for nbrs in src_adj]
    covered = [False] * len(tgt_adj)
    uncovered = len(tgt_adj)
    chosen: list[VertexRef] = []
    steps: list[CoverStep] = []
    candidates = range(len(src_adj))
    while uncovered:
        u = max(candidates, key=residual.__getitem__)
        gain = residual[u]
        assert gain >= 1, "greedy picked a vertex that covers nothing"
        for t in src_adj[u]:
            if not covered[t]:
                covered[t] = True
                for w in tgt_adj[t]:
                    residual[w] -= 1
        uncovered -= gain
        chosen.append(VertexRef(source, u))
        steps.append(CoverStep(VertexRef(source, u), gain, uncovered))
    return frozenset(chosen), CoverTrace(tuple(steps))


def is_total_dominating(g: BipartiteGraph, s: Iterable[VertexRef]) -> bool:
    """True iff every vertex of ``g`` has a neighbor in ``s``."""
    s = set(s)
    for side in Side:
        dominators = {v.index for v in s if v.side is side.other}
        for nbrs in g.adjacency(side):
            if dominators.isdisjoint(nbrs):
                return False
    return True


def greedy_tds(g: BipartiteGraph) -> tuple[TotalDominatingSet, CoverTrace, CoverTrace]:
    """Total dominating set from an X-pass covering Y and a Y-pass covering X."""
    from_x, trace_x = cover_side(g, Side.X)
    from_y, trace_y = cover_side(g, Side.Y)
    members = from_x | from_y
    if not is_total_dominating(g, members):
        raise AssertionError("greedy output is not a total dominating set")
    return TotalDominatingSet(members, len(from_x), len(from_y)), trace_x, trace_y


@dataclass(frozen=True)
class BoundReport:
    size: int
    n: int
    k: int
    bound: Fraction
    henning: float

    @property
    def satisfied(self) -> bool:
        return self.size <= self.bound


def verify_bound(g: BipartiteGraph) -> BoundReport:
    """Compare the greedy set size with ``n * closed_bound(min_degree)``."""
    k = min_degree(g)
    if k < 2:
        raise MinDegreeTooSmall(f"bound needs minimum degree >= 2, got {k}")
    tds, _, _ = greedy_tds(g)
    n = g.order
    return BoundReport(len(tds), n, k, n * closed_bound(k).exact, n * henning_bound(k))
