"""Simple undirected graphs and breadth-first distances."""

from __future__ import annotations

import enum
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

__all__ = [
    "Graph",
    "GraphError",
    "DistanceRow",
    "Unreachable",
    "UNREACHABLE",
    "from_edge_list",
    "bfs_distances",
    "all_pairs_distances",
    "connected_components",
]


class GraphError(ValueError):
    """Raised for malformed graphs or invalid vertex references."""


class Unreachable(enum.Enum):
    """Distance to a vertex in another component.

    Deliberately not an int, so it can never be mistaken for a hop count.
    """

    UNREACHABLE = "unreachable"

    def __repr__(self) -> str:
        return "UNREACHABLE"


UNREACHABLE = Unreachable.UNREACHABLE


class Graph:
    """Immutable finite simple undirected graph on vertices ``0..n-1``.

    Adjacency is held as sorted neighbor tuples so that iteration order (and
    therefore every derived output) is deterministic. ``labels`` optionally
    attaches a display string to each vertex.
    """

    __slots__ = ("_adj", "_edges", "_labels")

    def __init__(
        self,
        order: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
    ) -> None:
        if isinstance(order, bool) or not isinstance(order, int) or order < 0:
            raise GraphError(f"order must be a nonnegative int, got {order!r}")
        nbrs: list[set[int]] = [set() for _ in range(order)]
        for e in edges:
            u, v = e
            for x in (u, v):
                if isinstance(x, bool) or not isinstance(x, int):
                    raise GraphError(f"vertex ids must be ints, got {x!r}")
                if not 0 <= x < order:
                    raise GraphError(f"endpoint {x} out of range for order {order}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._edges = tuple(
            (u, v) for u in range(order) for v in self._adj[u] if u < v
        )
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != order:
                raise GraphError(f"expected {order} labels, got {len(labels)}")
        self._labels = labels

    @property
    def order(self) -> int:
        return len(self._adj)

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return self._edges

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    def vertices(self) -> range:
        return range(self.order)

    def neighbors(self, u: int) -> tuple[int, ...]:
        self._check_vertex(u)
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj[u]

    def label(self, u: int) -> str:
        """Display label of ``u``; the decimal id when no labels are attached."""
        self._check_vertex(u)
        return self._labels[u] if self._labels is not None else str(u)

    def with_labels(self, labels: Sequence[str] | None) -> Graph:
        return Graph(self.order, self._edges, labels)

    def relabeled(self, perm: Sequence[int]) -> Graph:
        """Copy of the graph with vertex ``u`` renamed to ``perm[u]``."""
        if sorted(perm) != list(range(self.order)):
            raise GraphError("perm must be a permutation of the vertex ids")
        return Graph(self.order, [(perm[u], perm[v]) for u, v in self._edges])

    def _check_vertex(self, u: int) -> None:
        if isinstance(u, bool) or not isinstance(u, int) or not 0 <= u < self.order:
            raise GraphError(f"invalid vertex {u!r} for graph of order {self.order}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj and self._labels == other._labels

    def __hash__(self) -> int:
        return hash((self._adj, self._labels))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


def from_edge_list(
    n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
) -> Graph:
    """Build a graph, collapsing duplicate edges and rejecting self-loops."""
    return Graph(n, edges, labels)


@dataclass(frozen=True)
class DistanceRow:
    source: int
    distances: tuple[int | Unreachable, ...]

    def __getitem__(self, v: int) -> int | Unreachable:
        return self.distances[v]

    def __len__(self) -> int:
        return len(self.distances)

    def reachable(self) -> list[int]:
        """Finite distances to vertices other than the source."""
        return [d for d in self.distances if d is not UNREACHABLE and d > 0]


def bfs_distances(g: Graph, source: int) -> DistanceRow:
    """Hop distances from ``source``; other components get ``UNREACHABLE``."""
    g._check_vertex(source)
    dist: list[int | Unreachable] = [UNREACHABLE] * g.order
    dist[source] = 0
    queue = deque([source])
    adj = g._adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1  # type: ignore[operator]
        for v in adj[u]:
            if dist[v] is UNREACHABLE:
                dist[v] = du
                queue.append(v)
    return DistanceRow(source, tuple(dist))


def all_pairs_distances(g: Graph) -> list[DistanceRow]:
    return [bfs_distances(g, u) for u in g.vertices()]


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.order
    comps = []
    for s in g.vertices():
        if seen[s]:
            continue
        row = bfs_distances(g, s)
        comp = [v for v, d in enumerate(row.distances) if d is not UNREACHABLE]
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps
