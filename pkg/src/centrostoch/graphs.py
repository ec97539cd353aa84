"""Bipartite zero-pattern graphs and the graph view of extremality.

The graph of an m x n matrix has row vertices r1..rm, column vertices
s1..sn, and an edge (i, j) per nonzero entry. Extremality of stochastic and
centrosymmetric stochastic matrices can be read off this graph alone; the
predicates here do exactly that and never consult the matrix-shape tests in
`extremes`, so the two routes stay independently checkable.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterable

from centrostoch.core import (
    Matrix,
    NotCentrosymmetricError,
    NotForestError,
    NotStochasticError,
    ShapeError,
    is_centrosymmetric,
    is_stochastic,
)

__all__ = [
    "BipartiteGraph",
    "bipartite_of",
    "is_forest",
    "longest_path",
    "fill",
    "is_extreme_stochastic_via_graph",
    "is_extreme_centro_via_graph",
]


class BipartiteGraph:
    """Immutable bipartite graph on row vertices 1..m and column vertices 1..n.

    Edges are 1-based (row, column) pairs without multiplicity.
    """

    __slots__ = ("row_count", "col_count", "edges")

    def __init__(
        self, row_count: int, col_count: int, edges: Iterable[tuple[int, int]]
    ) -> None:
        if row_count < 1 or col_count < 1:
            raise ShapeError("a bipartite graph needs both vertex classes nonempty")
        edge_set = frozenset((int(i), int(j)) for i, j in edges)
        for i, j in edge_set:
            if not (1 <= i <= row_count and 1 <= j <= col_count):
                raise ShapeError(f"edge ({i}, {j}) outside {row_count} x {col_count}")
        object.__setattr__(self, "row_count", row_count)
        object.__setattr__(self, "col_count", col_count)
        object.__setattr__(self, "edges", edge_set)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("BipartiteGraph is immutable")

    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def row_degree(self, i: int) -> int:
        if not 1 <= i <= self.row_count:
            raise IndexError(f"row vertex {i} outside 1..{self.row_count}")
        return sum(1 for r, _ in self.edges if r == i)

    def col_degree(self, j: int) -> int:
        if not 1 <= j <= self.col_count:
            raise IndexError(f"column vertex {j} outside 1..{self.col_count}")
        return sum(1 for _, c in self.edges if c == j)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (
            self.row_count == other.row_count
            and self.col_count == other.col_count
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.row_count, self.col_count, self.edges))

    def __repr__(self) -> str:
        return (
            f"BipartiteGraph({self.row_count}, {self.col_count}, "
            f"{list(self.sorted_edges())})"
        )


def bipartite_of(a: Matrix) -> BipartiteGraph:
    """Zero-pattern graph of a matrix: one edge per nonzero entry."""
    return BipartiteGraph(a.nrows, a.ncols, a.support())


def _adjacency(g: BipartiteGraph) -> dict[tuple[str, int], list[tuple[str, int]]]:
    adj: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for i in range(1, g.row_count + 1):
        adj[("r", i)] = []
    for j in range(1, g.col_count + 1):
        adj[("s", j)] = []
    for i, j in g.sorted_edges():
        adj[("r", i)].append(("s", j))
        adj[("s", j)].append(("r", i))
    return adj


def is_forest(g: BipartiteGraph) -> bool:
    """True iff the graph has no cycle."""
    parent: dict[tuple[str, int], tuple[str, int]] = {}

    def find(v):
        root = v
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(v, v) != v:
            parent[v], v = root, parent[v]
        return root

    for i, j in g.edges:
        a, b = find(("r", i)), find(("s", j))
        if a == b:
            return False
        parent[a] = b
    return True


def _farthest(adj, start):
    # BFS distance to the farthest vertex of start's component
    seen = {start: 0}
    queue = deque([start])
    far_vertex, far_dist = start, 0
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen[w] = seen[v] + 1
                if seen[w] > far_dist:
                    far_vertex, far_dist = w, seen[w]
                queue.append(w)
    return far_vertex, far_dist, seen


def longest_path(g: BipartiteGraph) -> int:
    """Edge count of a longest simple path; requires a forest.

    Within each tree component two sweeps find the diameter exactly. Raises
    NotForestError on cyclic input, where the sweep argument breaks down.
    """
    if not is_forest(g):
        raise NotForestError("longest_path needs a forest")
    adj = _adjacency(g)
    remaining = set(adj)
    best = 0
    while remaining:
        start = remaining.pop()
        end, _, seen = _farthest(adj, start)
        _, diameter, _ = _farthest(adj, end)
        best = max(best, diameter)
        remaining -= seen.keys()
    return best


def fill(g: BipartiteGraph) -> Fraction:
    """Edge count over m * n, exactly."""
    return Fraction(len(g.edges), g.row_count * g.col_count)


def _degrees(g: BipartiteGraph) -> list[int]:
    counts = [0] * g.row_count
    for i, _ in g.edges:
        counts[i - 1] += 1
    return counts


def is_extreme_stochastic_via_graph(a: Matrix) -> bool:
    """Graph reading of extremality in the stochastic polytope.

    A stochastic matrix is extreme iff its graph is a forest and every row
    vertex has degree 1. Raises NotStochasticError when `a` is not
    row-stochastic.
    """
    if not is_stochastic(a):
        raise NotStochasticError("graph test input must be row-stochastic")
    g = bipartite_of(a)
    return all(d == 1 for d in _degrees(g)) and is_forest(g)


def is_extreme_centro_via_graph(a: Matrix) -> bool:
    """Graph reading of extremality in the centrosymmetric polytope.

    For an even row count the criterion matches the plain stochastic one;
    for an odd row count the center row vertex may have degree 1 or 2 while
    all other row vertices have degree 1, and the graph must be a forest.
    Raises NotStochasticError / NotCentrosymmetricError on inputs outside
    the polytope.
    """
    if not is_stochastic(a):
        raise NotStochasticError("graph test input must be row-stochastic")
    if not is_centrosymmetric(a):
        raise NotCentrosymmetricError("graph test input must be centrosymmetric")
    g = bipartite_of(a)
    degrees = _degrees(g)
    m = a.nrows
    if m % 2 == 0:
        return all(d == 1 for d in degrees) and is_forest(g)
    center = m // 2
    for i, d in enumerate(degrees):
        if i == center:
            if d not in (1, 2):
                return False
        elif d != 1:
            return False
    return is_forest(g)
