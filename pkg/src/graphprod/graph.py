"""Simple commutation graphs stored as adjacency matrices."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import EmptyVertexSet, LoopEdge, ShapeMismatch, VertexOutOfRange


@dataclass(frozen=True)
class CommutationGraph:
    vertex_count: int
    adjacency: tuple[tuple[bool, ...], ...] = field(repr=False)

    def __post_init__(self):
        n = self.vertex_count
        if n < 1:
            raise EmptyVertexSet("a graph needs at least one vertex")
        if len(self.adjacency) != n or any(len(row) != n for row in self.adjacency):
            raise ShapeMismatch(f"adjacency matrix is not {n}x{n}")
        for i in range(n):
            if self.adjacency[i][i]:
                raise LoopEdge(f"loop at vertex {i}")
            for j in range(i):
                if self.adjacency[i][j] != self.adjacency[j][i]:
                    raise ShapeMismatch(f"adjacency is not symmetric at ({i}, {j})")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]] = ()) -> "CommutationGraph":
        """Build a graph from unordered pairs; repeated and reversed pairs collapse."""
        if vertex_count < 1:
            raise EmptyVertexSet("a graph needs at least one vertex")
        rows = [[False] * vertex_count for _ in range(vertex_count)]
        for a, b in edges:
            for v in (a, b):
                if not 0 <= v < vertex_count:
                    raise VertexOutOfRange(f"edge ({a}, {b}) mentions vertex {v}")
            if a == b:
                raise LoopEdge(f"loop at vertex {a}")
            rows[a][b] = rows[b][a] = True
        return cls(vertex_count, tuple(tuple(r) for r in rows))

    def adjacent(self, a: int, b: int) -> bool:
        return self.adjacency[a][b]

    def edges(self) -> list[tuple[int, int]]:
        n = self.vertex_count
        return [(a, b) for a in range(n) for b in range(a + 1, n) if self.adjacency[a][b]]

    def vertices(self) -> range:
        return range(self.vertex_count)


def _check_vertices(graph: CommutationGraph, vertices) -> list[int]:
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < graph.vertex_count:
            raise VertexOutOfRange(f"vertex {v} not in graph with {graph.vertex_count} vertices")
    return vs


def is_complete_subset(graph: CommutationGraph, vertex_set: Iterable[int]) -> bool:
    vs = _check_vertices(graph, vertex_set)
    adj = graph.adjacency
    return all(adj[a][b] for i, a in enumerate(vs) for b in vs[i + 1:])


def induced_subgraph(graph: CommutationGraph, vertex_subset: Iterable[int]):
    """Restrict ``graph`` to ``vertex_subset``.

    Returns ``(subgraph, index_map)`` where ``index_map`` sends old vertex
    indices to new ones; new indices follow the old order.
    """
    vs = _check_vertices(graph, vertex_subset)
    if not vs:
        raise EmptyVertexSet("cannot restrict to the empty vertex set")
    index_map = {old: new for new, old in enumerate(vs)}
    adj = tuple(tuple(graph.adjacency[a][b] for b in vs) for a in vs)
    return CommutationGraph(len(vs), adj), index_map
