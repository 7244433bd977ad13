"""Bipartite graph representation, generators, the doubling transform and
the ``tbip`` edge-list format.

Vertices are addressed by side (``X`` or ``Y``) and a 0-based index within
that side.  Graphs are immutable once built; every algorithm in the package
keeps its own working state.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class GraphError(ValueError):
    """Base class for invalid graph input."""


class IndexOutOfRange(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class GenerationFailed(RuntimeError):
    pass


class EdgeListSyntaxError(GraphError):
    """Malformed line in an edge-list file."""

    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class HeaderMismatch(GraphError):
    pass


class Side(str, enum.Enum):
    X = "X"
    Y = "Y"

    @property
    def other(self) -> Side:
        return Side.Y if self is Side.X else Side.X


class VertexRef(NamedTuple):
    side: Side
    index: int

    def __repr__(self) -> str:
        return f"{self.side.value.lower()}{self.index}"


@dataclass(frozen=True)
class BipartiteGraph:
    """Simple bipartite graph with sides X and Y.

    Use :func:`build` rather than the constructor; it validates the edge
    list and derives both adjacency tables.
    """

    n_x: int
    n_y: int
    adj_x: tuple[tuple[int, ...], ...]
    adj_y: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj_x)

    @property
    def order(self) -> int:
        return self.n_x + self.n_y

    def side_size(self, side: Side) -> int:
        return self.n_x if side is Side.X else self.n_y

    def adjacency(self, side: Side) -> tuple[tuple[int, ...], ...]:
        return self.adj_x if side is Side.X else self.adj_y

    def neighbors(self, v: VertexRef) -> tuple[int, ...]:
        """Indices of the neighbors of ``v`` on the opposite side."""
        return self.adjacency(v.side)[v.index]

    def degree(self, v: VertexRef) -> int:
        return len(self.neighbors(v))

    def vertices(self) -> list[VertexRef]:
        return [VertexRef(Side.X, i) for i in range(self.n_x)] + [
            VertexRef(Side.Y, j) for j in range(self.n_y)
        ]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(x, y)`` pairs sorted lexicographically."""
        return [(x, y) for x, ys in enumerate(self.adj_x) for y in ys]

    def __repr__(self) -> str:
        return f"BipartiteGraph(n_x={self.n_x}, n_y={self.n_y}, m={self.m})"


def build(n_x: int, n_y: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
    """Build a validated graph from ``(x, y)`` index pairs.

    Raises IndexOutOfRange for an index outside its side and DuplicateEdge
    if a pair occurs twice.
    """
    if n_x < 0 or n_y < 0:
        raise GraphError(f"side sizes must be non-negative, got {n_x}, {n_y}")
    adj_x: list[set[int]] = [set() for _ in range(n_x)]
    adj_y: list[set[int]] = [set() for _ in range(n_y)]
    for x, y in edges:
        if not (0 <= x < n_x):
            raise IndexOutOfRange(f"x index {x} not in [0, {n_x})")
        if not (0 <= y < n_y):
            raise IndexOutOfRange(f"y index {y} not in [0, {n_y})")
        if y in adj_x[x]:
            raise DuplicateEdge(f"edge ({x}, {y}) given more than once")
        adj_x[x].add(y)
        adj_y[y].add(x)
    return BipartiteGraph(
        n_x,
        n_y,
        tuple(tuple(sorted(a)) for a in adj_x),
        tuple(tuple(sorted(a)) for a in adj_y),
    )


def check_consistency(g: BipartiteGraph) -> bool:
    """Full cross-scan of both adjacency tables."""
    if len(g.adj_x) != g.n_x or len(g.adj_y) != g.n_y:
        return False
    for side in Side:
        for ys in g.adjacency(side):
            if list(ys) != sorted(set(ys)):
                return False
    forward = {(x, y) for x, ys in enumerate(g.adj_x) for y in ys}
    backward = {(x, y) for y, xs in enumerate(g.adj_y) for x in xs}
    return forward == backward and len(forward) == g.m


def min_degree(g: BipartiteGraph) -> int:
    if g.n_x == 0 or g.n_y == 0:
        raise EmptyGraph("minimum degree needs both sides non-empty")
    return min(len(a) for a in g.adj_x + g.adj_y)


def is_k_regular(g: BipartiteGraph, k: int) -> bool:
    return all(len(a) == k for a in g.adj_x + g.adj_y)


# --- generators ----------------------------------------------------------

MAX_RESAMPLES = 1000


def complete(n_x: int, n_y: int) -> BipartiteGraph:
    return build(n_x, n_y, [(x, y) for x in range(n_x) for y in range(n_y)])


def cycle(n_side: int) -> BipartiteGraph:
    """The cycle C_{2n} with x_i adjacent to y_i and y_{i+1 mod n}."""
    if n_side < 2:
        raise GraphError("a bipartite cycle needs at least 2 vertices per side")
    edges = []
    for i in range(n_side):
        edges.append((i, i))
        edges.append((i, (i + 1) % n_side))
    return build(n_side, n_side, edges)


def _random_matching(n_side: int, adj: list[set[int]], rng: random.Random) -> list[int]:
    """Perfect matching avoiding ``adj`` via augmenting paths in random order.

    ``adj`` is regular, so its complement in K_{n,n} is regular too and has
    a perfect matching; failure here means ``adj`` was not regular.
    """
    match_y: list[int | None] = [None] * n_side
    options = []
    for x in range(n_side):
        free = [y for y in range(n_side) if y not in adj[x]]
        rng.shuffle(free)
        options.append(free)

    def augment(x: int, seen: set[int]) -> bool:
        for y in options[x]:
            if y in seen:
                continue
            seen.add(y)
            if match_y[y] is None or augment(match_y[y], seen):
                match_y[y] = x
                return True
        return False

    order = list(range(n_side))
    rng.shuffle(order)
    for x in order:
        if not augment(x, set()):
            raise GenerationFailed("non-edges admit no perfect matching")
    perm = [0] * n_side
    for y, x in enumerate(match_y):
        perm[x] = y
    return perm


def _superpose_matchings(n_side: int, k: int, rng: random.Random) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n_side)]
    for _ in range(k):
        for _attempt in range(MAX_RESAMPLES):
            perm = list(range(n_side))
            rng.shuffle(perm)
            if all(perm[x] not in adj[x] for x in range(n_side)):
                break
        else:
            perm = _random_matching(n_side, adj, rng)
        for x in range(n_side):
            adj[x].add(perm[x])
    return adj


def gen_k_regular(n_side: int, k: int, seed: int) -> BipartiteGraph:
    """Random simple k-regular bipartite graph with ``n_side`` vertices per side.

    Built as a union of k random perfect matchings; a matching that hits an
    existing edge is redrawn.  After ``MAX_RESAMPLES`` redraws the matching
    is grown by augmenting paths over the remaining non-edges instead.
    For ``k > n_side / 2`` the complement of a random ``(n_side - k)``-regular
    graph is returned, which keeps dense cases (up to ``K_{n,n}``) cheap.
    """
    if not (1 <= k <= n_side):
        raise GraphError(f"need 1 <= k <= n_side, got k={k}, n_side={n_side}")
    rng = random.Random(seed)
    if 2 * k > n_side:
        missing = _superpose_matchings(n_side, n_side - k, rng)
        edges = [(x, y) for x in range(n_side) for y in range(n_side) if y not in missing[x]]
    else:
        adj = _superpose_matchings(n_side, k, rng)
        edges = [(x, y) for x in range(n_side) for y in sorted(adj[x])]
    return build(n_side, n_side, edges)


def gen_min_degree(
    n_x: int, n_y: int, k: int, extra_prob: float, seed: int
) -> BipartiteGraph:
    """Random bipartite graph with minimum degree at least ``k``.

    Every vertex demands k distinct random neighbors on the other side; the
    union of the demands is then padded with each missing edge independently
    with probability ``extra_prob``.
    """
    if k < 0 or k > min(n_x, n_y):
        raise GraphError(f"need 0 <= k <= min(n_x, n_y), got k={k}")
    if not 0.0 <= extra_prob <= 1.0:
        raise GraphError(f"extra_prob must lie in [0, 1], got {extra_prob}")
    rng = random.Random(seed)
    edges: set[tuple[int, int]] = set()
    for x in range(n_x):
        edges.update((x, y) for y in rng.sample(range(n_y), k))
    for y in range(n_y):
        edges.update((x, y) for x in rng.sample(range(n_x), k))
    if extra_prob > 0.0:
        for x in range(n_x):
            for y in range(n_y):
                if (x, y) not in edges and rng.random() < extra_prob:
                    edges.add((x, y))
    return build(n_x, n_y, sorted(edges))


def double_graph(g: BipartiteGraph) -> BipartiteGraph:
    """Join two crossed copies of ``g`` into a graph with equal sides.

    The new X side is ``X1 + Y2`` and the new Y side is ``Y1 + X2``:
    copy one keeps its indices, and in copy two the vertex ``y_j`` becomes
    ``x'_{n_x + j}`` while ``x_i`` becomes ``y'_{n_y + i}``.
    """
    n = g.n_x + g.n_y
    first = g.edges()
    second = [(g.n_x + y, g.n_y + x) for x, y in first]
    return build(n, n, first + second)


# --- edge-list format ----------------------------------------------------


def parse(text: str) -> BipartiteGraph:
    """Read the ``tbip`` edge-list format (1-based indices)."""
    header: tuple[int, int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise EdgeListSyntaxError(lineno, "second header line")
            if len(parts) != 5 or parts[1] != "tbip":
                raise EdgeListSyntaxError(lineno, "expected 'p tbip <n_x> <n_y> <m>'")
            header = (_int(parts[2], lineno), _int(parts[3], lineno), _int(parts[4], lineno))
        elif parts[0] == "e":
            if header is None:
                raise EdgeListSyntaxError(lineno, "edge line before header")
            if len(parts) != 3:
                raise EdgeListSyntaxError(lineno, "expected 'e <x> <y>'")
            x, y = _int(parts[1], lineno), _int(parts[2], lineno)
            if not (1 <= x <= header[0] and 1 <= y <= header[1]):
                raise IndexOutOfRange(f"line {lineno}: edge ({x}, {y}) outside declared sides")
            edges.append((x - 1, y - 1))
        else:
            raise EdgeListSyntaxError(lineno, f"unknown line type {parts[0]!r}")
    if header is None:
        raise EdgeListSyntaxError(0, "missing 'p tbip' header")
    n_x, n_y, m = header
    if m != len(edges):
        raise HeaderMismatch(f"header declares m={m} but file has {len(edges)} edge lines")
    return build(n_x, n_y, edges)


def _int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise EdgeListSyntaxError(lineno, f"not an integer: {token!r}") from None
    if value < 0:
        raise EdgeListSyntaxError(lineno, f"negative value: {token!r}")
    return value


def serialize(g: BipartiteGraph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p tbip {g.n_x} {g.n_y} {g.m}")
    lines.extend(f"e {x + 1} {y + 1}" for x, y in g.edges())
    return "\n".join(lines) + "\n"


def read(path) -> BipartiteGraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write(g: BipartiteGraph, path, comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(g, comments))
