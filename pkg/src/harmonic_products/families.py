"""Generators for the path, cycle, fan and star families.

Labels follow the usual drawing: path and cycle vertices are ``v1..vm``
(vertex 0 is ``v1``); fan and star have hub ``v0`` at vertex 0 followed by
``v1..vm``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

__all__ = ["FAMILIES", "FamilySpec", "generate", "parse_family_spec"]

FAMILIES = ("path", "cycle", "fan", "star")
_MINIMUM = {"path": 1, "cycle": 3, "fan": 1, "star": 1}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    m: int

    def __post_init__(self) -> None:
        if self.family not in _MINIMUM:
            raise ValueError(
                f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}"
            )
        if isinstance(self.m, bool) or not isinstance(self.m, int):
            raise ValueError(f"size parameter must be an int, got {self.m!r}")
        lo = _MINIMUM[self.family]
        if self.m < lo:
            raise ValueError(f"{self.family} requires m >= {lo}, got {self.m}")

    def __str__(self) -> str:
        return f"{self.family}:{self.m}"


def parse_family_spec(text: str) -> FamilySpec:
    """Parse ``name:m`` (an optional leading ``family:`` is accepted)."""
    parts = text.split(":")
    if parts and parts[0] == "family":
        parts = parts[1:]
    if len(parts) != 2:
        raise ValueError(f"expected family:<name>:<m>, got {text!r}")
    try:
        m = int(parts[1])
    except ValueError:
        raise ValueError(f"size parameter is not an integer in {text!r}") from None
    return FamilySpec(parts[0], m)


def generate(spec: FamilySpec | str, m: int | None = None) -> Graph:
    """Build the graph for ``spec``; ``generate("fan", 3)`` is also accepted."""
    if not isinstance(spec, FamilySpec):
        if m is None:
            raise TypeError("generate(name, m) requires m")
        spec = FamilySpec(spec, m)
    m = spec.m
    if spec.family == "path":
        return Graph(m, [(i, i + 1) for i in range(m - 1)], [f"v{i}" for i in range(1, m + 1)])
    if spec.family == "cycle":
        edges = [(i, (i + 1) % m) for i in range(m)]
        return Graph(m, edges, [f"v{i}" for i in range(1, m + 1)])
    labels = [f"v{i}" for i in range(m + 1)]
    spokes = [(0, j) for j in range(1, m + 1)]
    if spec.family == "star":
        return Graph(m + 1, spokes, labels)
    # fan: hub joined to the path v1..vm
    rim = [(j, j + 1) for j in range(1, m)]
    return Graph(m + 1, spokes + rim, labels)
