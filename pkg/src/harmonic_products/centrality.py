"""Brute-force harmonic centrality and centralization.

This is the oracle the closed forms are checked against: distances come
from BFS, sums are exact, and nothing here knows about graph families.

Centralization divides the total gap to the maximum by ``(n - 2) / 2``. With
that normalizer the star of any order scores exactly 1, the seven-vertex
worked example scores 13/30, and the fan-product centralization proofs
(which divide by ``m`` for ``2m + 2`` vertices) agree.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .graph import UNREACHABLE, Graph, GraphError, bfs_distances

__all__ = [
    "DegenerateGraphError",
    "VertexCentrality",
    "CentralityReport",
    "reciprocal_sum",
    "harmonic_centrality",
    "centralization",
    "centralization_from_values",
    "centrality_profile",
]


class DegenerateGraphError(GraphError):
    """The graph is too small for the requested normalization."""


def reciprocal_sum(g: Graph, u: int) -> Fraction:
    """Sum of ``1/d(u, x)`` over ``x != u``; unreachable vertices add 0."""
    row = bfs_distances(g, u)
    counts = Counter(d for d in row.distances if d is not UNREACHABLE and d > 0)
    return sum((Fraction(c, d) for d, c in counts.items()), Fraction(0))


def harmonic_centrality(g: Graph, u: int) -> Fraction:
    if g.order < 2:
        raise DegenerateGraphError("harmonic centrality needs order >= 2 (divides by n - 1)")
    return reciprocal_sum(g, u) / (g.order - 1)


def centralization_from_values(values: Sequence[Fraction]) -> Fraction:
    """Centralization computed from a full list of vertex centralities."""
    n = len(values)
    if n <= 2:
        raise DegenerateGraphError(f"centralization needs at least 3 vertices, got {n}")
    values = [Fraction(v) for v in values]
    top = max(values)
    gap = sum((top - v for v in values), Fraction(0))
    return gap / Fraction(n - 2, 2)


def centralization(g: Graph) -> Fraction:
    if g.order <= 2:
        raise DegenerateGraphError(f"centralization needs order >= 3, got {g.order}")
    return centralization_from_values([harmonic_centrality(g, u) for u in g.vertices()])


@dataclass(frozen=True)
class VertexCentrality:
    vertex: int
    label: str
    R: Fraction
    H: Fraction


@dataclass(frozen=True)
class CentralityReport:
    order: int
    per_vertex: tuple[VertexCentrality, ...]
    max_H: Fraction
    argmax: tuple[int, ...]
    centralization: Fraction | None  # None when order == 2

    def H(self, u: int) -> Fraction:
        return self.per_vertex[u].H

    def R(self, u: int) -> Fraction:
        return self.per_vertex[u].R


def centrality_profile(g: Graph) -> CentralityReport:
    """Per-vertex ``R`` and ``H`` plus the graph-level summary."""
    n = g.order
    if n < 2:
        raise DegenerateGraphError(f"centrality profile needs order >= 2, got {n}")
    rows = []
    for u in g.vertices():
        r = reciprocal_sum(g, u)
        rows.append(VertexCentrality(u, g.label(u), r, r / (n - 1)))
    hs = [row.H for row in rows]
    top = max(hs)
    return CentralityReport(
        order=n,
        per_vertex=tuple(rows),
        max_H=top,
        argmax=tuple(u for u, h in enumerate(hs) if h == top),
        centralization=centralization_from_values(hs) if n >= 3 else None,
    )
