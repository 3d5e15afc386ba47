"""Closed-form harmonic centrality and centralization of ``P_2`` products.

Each evaluator transcribes a published closed form for ``P_2 □ X`` or
``P_2 × X`` with ``X`` a path ``P_m``, cycle ``C_m`` or fan ``F_m``. They are
kept exactly as published, including the direct-product fan forms, which
assume ``P_2 × F_m`` splits into two copies of ``F_m``. The verification
harness decides which of them survive; nothing is corrected here.

Vertex classes refer to the column ``j`` of the right factor: ``v_1..v_m``
for paths and cycles, hub ``v_0`` plus ``v_1..v_m`` for fans.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .numeric import harmonic_number as H

__all__ = [
    "FormulaDomainError",
    "VertexClass",
    "TheoremId",
    "THEOREMS",
    "theorem",
    "theorem_for",
    "in_domain",
    "domain_minimum",
    "vertex_classes",
    "class_columns",
    "cartesian_centrality_formula",
    "cartesian_centralization_formula",
    "direct_centrality_formula",
    "direct_centralization_formula",
    "evaluate",
    "named_maximizers",
]


class FormulaDomainError(ValueError):
    """Parameter or vertex class outside a closed form's stated domain."""


_TAGS = ("end", "interior", "hub", "fan_end", "fan_interior", "any", "graph")
_INTERIOR_RE = re.compile(r"interior\((\d+)\)")


@dataclass(frozen=True, order=True)
class VertexClass:
    tag: str
    j: int | None = None

    def __post_init__(self) -> None:
        if self.tag not in _TAGS:
            raise ValueError(f"unknown vertex class {self.tag!r}")
        if (self.tag == "interior") != (self.j is not None):
            raise ValueError("exactly the interior class carries a column index")

    @classmethod
    def parse(cls, text: str) -> VertexClass:
        match = _INTERIOR_RE.fullmatch(text)
        if match:
            return cls("interior", int(match.group(1)))
        return cls(text)

    def __str__(self) -> str:
        return f"interior({self.j})" if self.tag == "interior" else self.tag


END = VertexClass("end")
HUB = VertexClass("hub")
FAN_END = VertexClass("fan_end")
FAN_INTERIOR = VertexClass("fan_interior")
ANY = VertexClass("any")
GRAPH = VertexClass("graph")


def interior(j: int) -> VertexClass:
    return VertexClass("interior", j)


@dataclass(frozen=True)
class TheoremId:
    number: str
    kind: str  # centrality | centralization
    product: str  # cartesian | direct
    family: str  # path | cycle | fan

    def __str__(self) -> str:
        return self.number


THEOREMS: tuple[TheoremId, ...] = (
    TheoremId("3.1", "centrality", "cartesian", "path"),
    TheoremId("3.2", "centrality", "cartesian", "cycle"),
    TheoremId("3.3", "centrality", "cartesian", "fan"),
    TheoremId("3.4", "centralization", "cartesian", "path"),
    TheoremId("3.5", "centralization", "cartesian", "cycle"),
    TheoremId("3.6", "centralization", "cartesian", "fan"),
    TheoremId("3.7", "centrality", "direct", "path"),
    TheoremId("3.8", "centrality", "direct", "cycle"),
    TheoremId("3.9", "centrality", "direct", "fan"),
    TheoremId("3.10", "centralization", "direct", "path"),
    TheoremId("3.11", "centralization", "direct", "cycle"),
    TheoremId("3.12", "centralization", "direct", "fan"),
)
_BY_NUMBER = {t.number: t for t in THEOREMS}
_BY_TRIPLE = {(t.kind, t.product, t.family): t for t in THEOREMS}


def theorem(key: str | TheoremId) -> TheoremId:
    if isinstance(key, TheoremId):
        return key
    try:
        return _BY_NUMBER[key]
    except KeyError:
        raise KeyError(f"unknown theorem {key!r}") from None


def theorem_for(kind: str, product: str, family: str) -> TheoremId:
    """Look a theorem up by what it states rather than by number."""
    return _BY_TRIPLE[(kind, product, family)]


# Smallest m for which each closed form is stated. Theorem 3.4 also excludes
# m = 2, where the even branch does not reduce to the 4-cycle's value of 0.
_MIN_M = {
    "3.1": 1, "3.2": 3, "3.3": 2, "3.4": 3, "3.5": 3, "3.6": 2,
    "3.7": 1, "3.8": 3, "3.9": 2, "3.10": 3, "3.11": 3, "3.12": 2,
}


def domain_minimum(thm: str | TheoremId) -> int:
    return _MIN_M[theorem(thm).number]


def in_domain(thm: str | TheoremId, m: int) -> bool:
    return m >= domain_minimum(thm)


def vertex_classes(family: str, m: int) -> list[VertexClass]:
    """Vertex classes a centrality theorem distinguishes for this ``m``."""
    if family == "path":
        return [END] + [interior(j) for j in range(2, m)]
    if family == "cycle":
        return [ANY]
    if family == "fan":
        return [HUB, FAN_END] + ([FAN_INTERIOR] if m >= 3 else [])
    raise FormulaDomainError(f"unknown family {family!r}")


def class_columns(family: str, m: int, locator: VertexClass) -> list[int]:
    """Right-factor vertex ids (0-based) belonging to ``locator``.

    Paths and cycles store ``v_j`` at id ``j - 1``; fans store ``v_j`` at id ``j``.
    """
    _check_locator(family, m, locator)
    tag = locator.tag
    if family == "cycle":
        return list(range(m))
    if family == "path":
        if tag == "end":
            return sorted({0, m - 1})
        return [locator.j - 1]
    if tag == "hub":
        return [0]
    if tag == "fan_end":
        return [1, m]
    return list(range(2, m))


def _check_locator(family: str, m: int, locator: VertexClass) -> None:
    allowed = {
        "path": ("end", "interior"),
        "cycle": ("any",),
        "fan": ("hub", "fan_end", "fan_interior"),
    }
    if family not in allowed:
        raise FormulaDomainError(f"unknown family {family!r}")
    if locator.tag not in allowed[family]:
        raise FormulaDomainError(f"class {locator} does not apply to the {family} family")
    if locator.tag == "interior" and not 1 < locator.j < m:
        raise FormulaDomainError(f"interior({locator.j}) needs 1 < j < {m}")
    if family == "path" and m < 1:
        raise FormulaDomainError(f"path needs m >= 1, got {m}")
    if family == "cycle" and m < 3:
        raise FormulaDomainError(f"cycle needs m >= 3, got {m}")
    if family == "fan":
        lo = 3 if locator.tag == "fan_interior" else 2
        if m < lo:
            raise FormulaDomainError(f"fan class {locator} needs m >= {lo}, got {m}")


def _ladder_interior_sum(m: int, hi: int) -> Fraction:
    # empty when hi < 2
    return sum(
        (2 * H(i - 1) + 2 * H(m - i) + Fraction(1 - i, i) + Fraction(1, m - i + 1)
         for i in range(2, hi + 1)),
        Fraction(0),
    )


def _path_interior_sum(m: int, hi: int) -> Fraction:
    return sum((H(j - 1) + H(m - j) for j in range(2, hi + 1)), Fraction(0))


def cartesian_centrality_formula(family: str, m: int, locator: VertexClass) -> Fraction:
    _check_locator(family, m, locator)
    if family == "path":
        if locator.tag == "end":
            return (2 * H(m - 1) + Fraction(1, m)) / (2 * m - 1)
        j = locator.j
        return (2 * (H(j - 1) + H(m - j)) + Fraction(1, j) + Fraction(1, m - j + 1) - 1) / (2 * m - 1)
    if family == "cycle":
        if m % 2:
            return (4 * H((m - 1) // 2) + Fraction(3 - m, m + 1)) / (2 * m - 1)
        return (4 * H(m // 2) + Fraction(2, m + 2) - Fraction(m + 2, m)) / (2 * m - 1)
    if locator.tag == "hub":
        return Fraction(3 * m + 2, 2 * (2 * m + 1))
    if locator.tag == "fan_end":
        return Fraction(5 * m + 14, 6 * (2 * m + 1))
    return Fraction(5 * m + 18, 6 * (2 * m + 1))


def cartesian_centralization_formula(family: str, m: int) -> Fraction:
    if family == "path":
        if m < 3:
            raise FormulaDomainError(f"ladder centralization needs m >= 3, got {m}")
        if m % 2:
            k = (m - 1) // 2
            bracket = (
                2 * (m - 1) * H(k)
                - 2 * H(m - 1)
                + Fraction(2 * (m - 1), m + 1)
                - Fraction(m - 1, 2)
                - Fraction(1, m)
                - _ladder_interior_sum(m, k)
            )
            return Fraction(4, (m - 1) * (2 * m - 1)) * bracket
        bracket = (
            4 * (m - 2) * H(m // 2)
            - 4 * H(m - 1)
            - Fraction(m * m - 2, m)
            + Fraction(2 * m - 4, m + 2)
            - 2 * _ladder_interior_sum(m, (m - 2) // 2)
        )
        return Fraction(2, (2 * m - 1) * (m - 1)) * bracket
    if family == "cycle":
        if m < 3:
            raise FormulaDomainError(f"prism centralization needs m >= 3, got {m}")
        return Fraction(0)
    if family == "fan":
        if m < 2:
            raise FormulaDomainError(f"fan product centralization needs m >= 2, got {m}")
        return Fraction(4 * (m - 1) * (m - 2), 3 * m * (2 * m + 1))
    raise FormulaDomainError(f"unknown family {family!r}")


def direct_centrality_formula(family: str, m: int, locator: VertexClass) -> Fraction:
    _check_locator(family, m, locator)
    if family == "path":
        if locator.tag == "end":
            return H(m - 1) / (2 * m - 1)
        j = locator.j
        return (H(j - 1) + H(m - j)) / (2 * m - 1)
    if family == "cycle":
        if m % 2:
            return (2 * H(m - 1) + Fraction(1, m)) / (2 * m - 1)
        return (2 * H((m - 2) // 2) + Fraction(2, m)) / (2 * m - 1)
    if locator.tag == "hub":
        return Fraction(m, 2 * m + 1)
    if locator.tag == "fan_end":
        return Fraction(m + 2, 2 * (2 * m + 1))
    return Fraction(m + 3, 2 * (2 * m + 1))


def direct_centralization_formula(family: str, m: int) -> Fraction:
    if family == "path":
        if m < 3:
            raise FormulaDomainError(f"direct path centralization needs m >= 3, got {m}")
        if m % 2:
            k = (m - 1) // 2
            top = (m - 1) * H(k) - H(m - 1) - _path_interior_sum(m, k)
        else:
            k = (m - 2) // 2
            top = (m - 2) * (H(k) + Fraction(1, m)) - H(m - 1) - _path_interior_sum(m, k)
        return 4 * top / ((m - 1) * (2 * m - 1))
    if family == "cycle":
        if m < 3:
            raise FormulaDomainError(f"direct cycle centralization needs m >= 3, got {m}")
        return Fraction(0)
    if family == "fan":
        if m < 2:
            raise FormulaDomainError(f"direct fan centralization needs m >= 2, got {m}")
        return Fraction((m - 1) * (m - 2), m * (2 * m + 1))
    raise FormulaDomainError(f"unknown family {family!r}")


def evaluate(thm: str | TheoremId, m: int, locator: VertexClass | None = None) -> Fraction:
    """Dispatch to the closed form named by ``thm``."""
    t = theorem(thm)
    if not in_domain(t, m):
        raise FormulaDomainError(f"theorem {t} is stated for m >= {domain_minimum(t)}, got {m}")
    if t.kind == "centrality":
        if locator is None:
            raise FormulaDomainError(f"theorem {t} needs a vertex class")
        fn = cartesian_centrality_formula if t.product == "cartesian" else direct_centrality_formula
        return fn(t.family, m, locator)
    fn = cartesian_centralization_formula if t.product == "cartesian" else direct_centralization_formula
    return fn(t.family, m)


def named_maximizers(thm: str | TheoremId, m: int) -> tuple[Fraction, ...] | None:
    """Ladder/path columns ``j`` that the centralization derivation names as maximal.

    Returned as fractions because one published choice (``(m+1)/2`` for even
    ``m``) is not an integer. ``None`` when no columns are named.
    """
    t = theorem(thm)
    if t.number == "3.4":
        if m % 2:
            return (Fraction(m + 1, 2),)
        return (Fraction(m, 2), Fraction(m + 2, 2))
    if t.number == "3.10":
        if m % 2:
            return (Fraction(m - 1, 2),)
        return (Fraction(m, 2), Fraction(m + 1, 2))
    return None
