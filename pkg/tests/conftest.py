"""Shared strategies and independent oracles.

The oracles here deliberately avoid the package's BFS and product code:
distances come from Floyd-Warshall, products from Kronecker sums of
adjacency matrices.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from hypothesis import strategies as st

from harmonic_products.graph import Graph

INF = float("inf")


@st.composite
def small_graphs(draw, min_order: int = 1, max_order: int = 8) -> Graph:
    n = draw(st.integers(min_order, max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def floyd_warshall(g: Graph) -> list[list[float]]:
    n = g.order
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            for j in range(n):
                if dik + d[k][j] < d[i][j]:
                    d[i][j] = dik + d[k][j]
    return d


def brute_reciprocal_sums(g: Graph) -> list[Fraction]:
    d = floyd_warshall(g)
    return [
        sum((Fraction(1, int(x)) for j, x in enumerate(row) if j != i and x != INF), Fraction(0))
        for i, row in enumerate(d)
    ]


def brute_centralities(g: Graph) -> list[Fraction]:
    return [r / (g.order - 1) for r in brute_reciprocal_sums(g)]


def adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.order, g.order), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return a


def graph_from_matrix(a: np.ndarray) -> Graph:
    n = a.shape[0]
    return Graph(n, [(int(u), int(v)) for u, v in zip(*np.nonzero(np.triu(a, 1)))])


def kron_cartesian(g: Graph, h: Graph) -> Graph:
    a = np.kron(adjacency(g), np.eye(h.order, dtype=np.int64))
    b = np.kron(np.eye(g.order, dtype=np.int64), adjacency(h))
    return graph_from_matrix(a + b)


def kron_direct(g: Graph, h: Graph) -> Graph:
    return graph_from_matrix(np.kron(adjacency(g), adjacency(h)))
