"""Sweep the closed forms against the BFS oracle.

For every theorem and every ``m`` in range the product ``P_2 □ X`` or
``P_2 × X`` is built by enumeration, profiled with the oracle, and compared
class by class (or at graph level) using exact equality. Mismatches are
returned as data; callers decide whether they are fatal.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import formulas
from .centrality import CentralityReport, centrality_profile
from .families import generate
from .formulas import GRAPH, TheoremId, VertexClass
from .graph import connected_components
from .numeric import format_rational
from .products import ProductGraph, cartesian_product, direct_product

__all__ = [
    "ClassNotAnOrbitError",
    "VerificationRecord",
    "TheoremCounts",
    "VerificationSummary",
    "RECORD_FIELDS",
    "build_product",
    "product_profile",
    "oracle_class_value",
    "verify_theorem",
    "verify_range",
    "verify_all",
]

log = logging.getLogger(__name__)

RECORD_FIELDS = ("theorem", "m", "locator", "formula", "oracle", "match", "note")

# Direct-product proofs describe P_2 × X as two disjoint copies of X.
_ASSUMED_COMPONENTS = 2


class ClassNotAnOrbitError(ValueError):
    """Vertices of one named class received different oracle centralities."""

    def __init__(self, locator: VertexClass, values: dict[int, Fraction]) -> None:
        self.locator = locator
        self.values = values
        distinct = sorted(set(values.values()))
        super().__init__(
            f"class {locator} is not an orbit: values "
            + "|".join(format_rational(v) for v in distinct)
        )


@dataclass(frozen=True)
class VerificationRecord:
    theorem: str
    m: int
    locator: str
    formula: Fraction
    oracle: Fraction
    match: bool
    note: str = ""

    def as_row(self) -> dict[str, str]:
        """Text form used by both CSV and JSON output."""
        return {
            "theorem": self.theorem,
            "m": str(self.m),
            "locator": self.locator,
            "formula": format_rational(self.formula),
            "oracle": format_rational(self.oracle),
            "match": "true" if self.match else "false",
            "note": self.note,
        }

    def as_json(self) -> dict:
        row = self.as_row()
        row["m"] = self.m
        row["match"] = self.match
        return row


@dataclass
class TheoremCounts:
    checked: int = 0
    matched: int = 0
    mismatched: int = 0
    skipped: list[int] = field(default_factory=list)


@dataclass
class VerificationSummary:
    counts: dict[str, TheoremCounts]
    records: list[VerificationRecord]

    @property
    def mismatches(self) -> list[VerificationRecord]:
        return [r for r in self.records if not r.match]

    def fully_matched(self, number: str) -> bool:
        c = self.counts[number]
        return c.checked > 0 and c.mismatched == 0

    def as_dict(self) -> dict:
        return {
            "counts": {k: asdict(v) for k, v in self.counts.items()},
            "mismatches": [r.as_json() for r in self.mismatches],
        }


def build_product(kind: str, family: str, m: int) -> ProductGraph:
    left = generate("path", 2)
    right = generate(family, m)
    if kind == "cartesian":
        return cartesian_product(left, right)
    if kind == "direct":
        return direct_product(left, right)
    raise ValueError(f"unknown product {kind!r}")


@lru_cache(maxsize=256)
def product_profile(kind: str, family: str, m: int) -> tuple[ProductGraph, CentralityReport]:
    product = build_product(kind, family, m)
    return product, centrality_profile(product.graph)


def _family_m(family: str, product: ProductGraph) -> int:
    # fans and stars carry the hub in addition to v_1..v_m
    return product.right_order - 1 if family in ("fan", "star") else product.right_order


def _column_of(family: str, right_id: int) -> int:
    return right_id if family == "fan" else right_id + 1


def oracle_class_value(
    product: ProductGraph,
    family: str,
    locator: VertexClass,
    report: CentralityReport | None = None,
) -> Fraction:
    """Shared oracle centrality of every vertex in ``locator``.

    The representative is ``(u_1, v_j)`` for the first column of the class;
    every member across both rows must agree or ``ClassNotAnOrbitError`` is
    raised.
    """
    if report is None:
        report = centrality_profile(product.graph)
    m = _family_m(family, product)
    cols = formulas.class_columns(family, m, locator)
    members = [product.vertex(i, c) for c in cols for i in range(product.left_order)]
    values = {v: report.H(v) for v in members}
    representative = values[product.vertex(0, cols[0])]
    if any(h != representative for h in values.values()):
        raise ClassNotAnOrbitError(locator, values)
    return representative


def _component_note(thm: TheoremId, product: ProductGraph) -> str:
    if thm.product != "direct":
        return ""
    count = len(connected_components(product.graph))
    if count == _ASSUMED_COMPONENTS:
        return ""
    return f"product has {count} component(s); proof assumed two components"


def _maximizer_note(thm: TheoremId, m: int, product: ProductGraph, report: CentralityReport) -> str:
    named = formulas.named_maximizers(thm, m)
    if named is None:
        return ""
    oracle_cols = sorted({_column_of(thm.family, product.pair(v)[1]) for v in report.argmax})
    if set(named) == {Fraction(c) for c in oracle_cols}:
        return ""
    shown = ",".join(format_rational(j) for j in named)
    return (
        f"named maximizers j={shown} differ from oracle argmax j="
        + ",".join(str(c) for c in oracle_cols)
    )


def _join(*notes: str) -> str:
    return "; ".join(n for n in notes if n)


def _instance_records(thm: TheoremId, m: int) -> list[VerificationRecord]:
    product, report = product_profile(thm.product, thm.family, m)
    conn = _component_note(thm, product)
    if thm.kind == "centralization":
        value = formulas.evaluate(thm, m)
        oracle = report.centralization
        return [
            VerificationRecord(
                thm.number, m, str(GRAPH), value, oracle, value == oracle,
                _join(conn, _maximizer_note(thm, m, product, report)),
            )
        ]
    records = []
    for locator in formulas.vertex_classes(thm.family, m):
        value = formulas.evaluate(thm, m, locator)
        try:
            oracle = oracle_class_value(product, thm.family, locator, report)
            match = value == oracle
            orbit = ""
        except ClassNotAnOrbitError as exc:
            # keep the representative's value; the class only matches if every member does
            oracle = exc.values[min(exc.values)]
            match = all(h == value for h in exc.values.values())
            orbit = f"class-not-an-orbit: {exc}"
        records.append(
            VerificationRecord(thm.number, m, str(locator), value, oracle, match, _join(conn, orbit))
        )
    return records


def _verify(thm: TheoremId, m_min: int, m_max: int) -> tuple[list[VerificationRecord], list[int]]:
    records: list[VerificationRecord] = []
    skipped: list[int] = []
    for m in range(m_min, m_max + 1):
        if not formulas.in_domain(thm, m):
            log.info("theorem %s: m=%d outside stated domain, skipped", thm, m)
            skipped.append(m)
            continue
        records.extend(_instance_records(thm, m))
    return records, skipped


def verify_theorem(
    thm: str | TheoremId, m_min: int, m_max: int | None = None
) -> list[VerificationRecord]:
    """Records for one theorem over the inclusive range ``m_min..m_max``.

    Parameters outside the theorem's stated domain are skipped.
    """
    if m_max is None:
        m_max = m_min
    records, _ = _verify(formulas.theorem(thm), m_min, m_max)
    return records


def _summarize(plan: list[tuple[TheoremId, int, int]]) -> VerificationSummary:
    counts: dict[str, TheoremCounts] = {}
    records: list[VerificationRecord] = []
    for thm, lo, hi in plan:
        recs, skipped = _verify(thm, lo, hi)
        matched = sum(r.match for r in recs)
        counts[thm.number] = TheoremCounts(len(recs), matched, len(recs) - matched, skipped)
        records.extend(recs)
    return VerificationSummary(counts, records)


def verify_range(
    theorems: list[str | TheoremId] | None, m_min: int, m_max: int
) -> VerificationSummary:
    """Run several theorems (all twelve by default) over one range."""
    if m_min > m_max:
        raise ValueError(f"m_min ({m_min}) exceeds m_max ({m_max})")
    chosen = formulas.THEOREMS if theorems is None else [formulas.theorem(t) for t in theorems]
    return _summarize([(t, m_min, m_max) for t in chosen])


def verify_all(m_max: int) -> VerificationSummary:
    """All twelve theorems from their smallest stated ``m`` up to ``m_max``."""
    return _summarize([(t, formulas.domain_minimum(t), m_max) for t in formulas.THEOREMS])
