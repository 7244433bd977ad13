"""Exact total domination number for small graphs.

Two independent methods: a branch-and-bound over the set-cover view of the
problem, and plain subset enumeration used to cross-check it.  Vertices are
numbered ``x_i -> i`` and ``y_j -> n_x + j`` and vertex sets are bitmasks.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .graph import BipartiteGraph, GraphError, Side, VertexRef


class TooLarge(GraphError):
    pass


class Infeasible(GraphError):
    pass


class Status(enum.Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    BUDGET_EXCEEDED = "BudgetExceeded"


@dataclass(frozen=True)
class ExactResult:
    gamma_t: int | None
    witness: frozenset[VertexRef]
    status: Status
    nodes_explored: int


def _neighborhood_masks(g: BipartiteGraph) -> list[int]:
    masks = []
    for ys in g.adj_x:
        masks.append(sum(1 << (g.n_x + y) for y in ys))
    for xs in g.adj_y:
        masks.append(sum(1 << x for x in xs))
    return masks


def _to_refs(g: BipartiteGraph, ids) -> frozenset[VertexRef]:
    return frozenset(
        VertexRef(Side.X, v) if v < g.n_x else VertexRef(Side.Y, v - g.n_x) for v in ids
    )


def _greedy_cover(nbr: list[int], full: int) -> list[int]:
    chosen = []
    uncovered = full
    while uncovered:
        v = max(range(len(nbr)), key=lambda c: (nbr[c] & uncovered).bit_count())
        chosen.append(v)
        uncovered &= ~nbr[v]
    return chosen


def exact_gamma_t(g: BipartiteGraph, node_budget: int = 1_000_000) -> ExactResult:
    """Minimum total dominating set by branch-and-bound.

    Each vertex must be dominated by one of its neighbors.  The search
    branches on the undominated vertex with the fewest admissible
    dominators, excluding candidates already tried at an ancestor, and
    prunes with ``ceil(undominated / best remaining coverage)``.  The
    incumbent starts from a greedy cover.  Exceeding ``node_budget`` returns
    the incumbent with status BUDGET_EXCEEDED.
    """
    n = g.order
    nbr = _neighborhood_masks(g)
    if any(m == 0 for m in nbr):
        return ExactResult(None, frozenset(), Status.INFEASIBLE, 0)
    full = (1 << n) - 1
    if n == 0:
        return ExactResult(0, frozenset(), Status.OPTIMAL, 0)

    best = _greedy_cover(nbr, full)
    nodes = 0
    exhausted = False

    def search(uncovered: int, excluded: int, chosen: list[int]) -> None:
        nonlocal best, nodes, exhausted
        if exhausted:
            return
        nodes += 1
        if nodes > node_budget:
            exhausted = True
            return
        if not uncovered:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        room = len(best) - len(chosen)
        if room <= 1:
            return
        allowed = [c for c in range(n) if not (excluded >> c) & 1]
        reach = max(((nbr[c] & uncovered).bit_count() for c in allowed), default=0)
        if reach == 0:
            return
        need = -(-uncovered.bit_count() // reach)
        if need >= room:
            return

        # most constrained undominated vertex; its dominators are its neighbors
        pick_cands = None
        rest = uncovered
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            cands = nbr[v] & ~excluded
            if pick_cands is None or cands.bit_count() < pick_cands.bit_count():
                pick_cands = cands
                if not cands:
                    return
        order = []
        while pick_cands:
            low = pick_cands & -pick_cands
            order.append(low.bit_length() - 1)
            pick_cands ^= low
        order.sort(key=lambda c: -(nbr[c] & uncovered).bit_count())
        for c in order:
            chosen.append(c)
            search(uncovered & ~nbr[c], excluded, chosen)
            chosen.pop()
            excluded |= 1 << c

    search(full, 0, [])
    status = Status.BUDGET_EXCEEDED if exhausted else Status.OPTIMAL
    return ExactResult(len(best), _to_refs(g, best), status, min(nodes, node_budget))


MAX_EXHAUSTIVE = 24


def exhaustive_gamma_t(g: BipartiteGraph) -> int:
    """Smallest total dominating set size by enumerating subsets by size."""
    n = g.order
    if n > MAX_EXHAUSTIVE:
        raise TooLarge(f"exhaustive search limited to {MAX_EXHAUSTIVE} vertices, got {n}")
    nbr = _neighborhood_masks(g)
    if any(m == 0 for m in nbr):
        raise Infeasible("graph has an isolated vertex")
    full = (1 << n) - 1
    for size in range(n + 1):
        for subset in itertools.combinations(range(n), size):
            covered = 0
            for v in subset:
                covered |= nbr[v]
            if covered == full:
                return size
    raise AssertionError("unreachable: the whole vertex set dominates")
