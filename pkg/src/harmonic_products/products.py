"""Cartesian and direct products of two graphs.

Both constructors enumerate the adjacency rule over all vertex pairs; no
family is special-cased. Product vertex ``(i, j)`` gets flat id
``i * right_order + j`` and the label ``"(i,j)"``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError

__all__ = ["ProductGraph", "cartesian_product", "direct_product", "pair_label"]


def pair_label(i: int, j: int) -> str:
    return f"({i},{j})"


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    left_order: int
    right_order: int
    kind: str

    @property
    def order(self) -> int:
        return self.graph.order

    def vertex(self, i: int, j: int) -> int:
        if not (0 <= i < self.left_order and 0 <= j < self.right_order):
            raise GraphError(f"pair ({i},{j}) outside {self.left_order}x{self.right_order}")
        return i * self.right_order + j

    def pair(self, v: int) -> tuple[int, int]:
        return divmod(v, self.right_order)


def _check_factors(g: Graph, h: Graph) -> None:
    if g.order == 0 or h.order == 0:
        raise GraphError("product factors must be nonempty")


def _build(g: Graph, h: Graph, kind: str, edges: list[tuple[int, int]]) -> ProductGraph:
    labels = [pair_label(i, j) for i in range(g.order) for j in range(h.order)]
    return ProductGraph(Graph(g.order * h.order, edges, labels), g.order, h.order, kind)


def cartesian_product(g: Graph, h: Graph) -> ProductGraph:
    """``G □ H``: one coordinate equal, the other adjacent in its factor."""
    _check_factors(g, h)
    k = h.order
    edges = []
    for u in g.vertices():
        for v in h.vertices():
            a = u * k + v
            for u2 in g.vertices():
                for v2 in h.vertices():
                    b = u2 * k + v2
                    if b <= a:
                        continue
                    if (u == u2 and h.has_edge(v, v2)) or (v == v2 and g.has_edge(u, u2)):
                        edges.append((a, b))
    return _build(g, h, "cartesian", edges)


def direct_product(g: Graph, h: Graph) -> ProductGraph:
    """``G × H``: both coordinates adjacent in their factors."""
    _check_factors(g, h)
    k = h.order
    edges = []
    for u in g.vertices():
        for v in h.vertices():
            a = u * k + v
            for u2 in g.vertices():
                for v2 in h.vertices():
                    b = u2 * k + v2
                    if b > a and g.has_edge(u, u2) and h.has_edge(v, v2):
                        edges.append((a, b))
    return _build(g, h, "direct", edges)
