from fractions import Fraction

import pytest

from harmonic_products.formulas import VertexClass
from harmonic_products.verify import (
    ClassNotAnOrbitError,
    build_product,
    oracle_class_value,
    product_profile,
    verify_all,
    verify_range,
    verify_theorem,
)

F = Fraction


def test_oracle_class_value_examples():
    product, report = product_profile("cartesian", "path", 5)
    assert oracle_class_value(product, "path", VertexClass("end"), report) == report.H(product.vertex(0, 0))

    prism = build_product("cartesian", "cycle", 6)
    value = oracle_class_value(prism, "cycle", VertexClass("any"))
    _, report = product_profile("cartesian", "cycle", 6)
    assert {v.H for v in report.per_vertex} == {value}

    cover = build_product("direct", "fan", 3)
    assert oracle_class_value(cover, "fan", VertexClass("hub")) == F(29, 42)


def test_class_not_an_orbit_is_detected():
    # on the plain ladder, the path "end" columns differ from the interior ones;
    # misusing the cycle family's "any" class must trip the orbit check
    ladder = build_product("cartesian", "path", 4)
    with pytest.raises(ClassNotAnOrbitError) as info:
        oracle_class_value(ladder, "cycle", VertexClass("any"))
    assert "47/84" in str(info.value) and "29/42" in str(info.value)


def test_prism_sweep_matches():
    records = verify_theorem("3.2", 3, 10)
    assert [r.m for r in records] == list(range(3, 11))
    assert all(r.match for r in records)
    assert records[0].oracle == F(4, 5) and records[1].oracle == F(29, 42)


def test_direct_cycle_centralization_zero():
    records = verify_theorem("3.11", 3, 10)
    assert all(r.match and r.oracle == 0 for r in records)


def test_direct_fan_hub_mismatch():
    records = verify_theorem("3.9", 3)
    hub = next(r for r in records if r.locator == "hub")
    assert hub.formula == F(3, 7)
    assert hub.oracle == F(29, 42)
    assert not hub.match
    assert "1 component(s)" in hub.note


def test_out_of_domain_instances_are_skipped():
    summary = verify_range(["3.4"], 1, 5)
    assert summary.counts["3.4"].skipped == [1, 2]
    assert [r.m for r in summary.records] == [3, 4, 5]
    assert verify_theorem("3.2", 1, 2) == []


def test_verify_all_partition():
    summary = verify_all(12)
    assert list(summary.counts) == [f"3.{i}" for i in range(1, 13)]
    for number, c in summary.counts.items():
        assert c.checked == c.matched + c.mismatched
        if number in ("3.9", "3.12"):
            assert c.mismatched > 0
        else:
            assert summary.fully_matched(number), number
    assert {r.theorem for r in summary.mismatches} == {"3.9", "3.12"}


def test_domain_coverage_small_ranges():
    summary = verify_all(4)
    cycles = [r.m for r in summary.records if r.theorem == "3.2"]
    assert 3 in cycles and 4 in cycles
    ladders = [r.m for r in verify_range(["3.4"], 1, 5).records]
    assert ladders == [3, 4, 5]


def test_ladder_named_maximizers_agree_with_oracle():
    for r in verify_theorem("3.4", 3, 20):
        assert "named maximizers" not in r.note


def test_direct_path_named_maximizers_reported():
    notes = [r.note for r in verify_theorem("3.10", 3, 8)]
    assert all("named maximizers" in n for n in notes)
    assert "j=1 differ from oracle argmax j=2" in notes[0]


def test_paired_theorems_match_together():
    summary = verify_all(16)
    by = {}
    for r in summary.records:
        by.setdefault((r.theorem, r.m), []).append(r.match)
    for cent, cz in (("3.1", "3.4"), ("3.2", "3.5"), ("3.3", "3.6"), ("3.7", "3.10"), ("3.8", "3.11")):
        for (t, m), matches in by.items():
            if t == cent and all(matches) and (cz, m) in by:
                assert all(by[(cz, m)])


def test_records_are_reproducible():
    a = [r.as_row() for r in verify_range(None, 3, 9).records]
    product_profile.cache_clear()
    b = [r.as_row() for r in verify_range(None, 3, 9).records]
    assert a == b


def test_record_serialization():
    r = verify_theorem("3.12", 3)[0]
    row = r.as_row()
    assert row == {
        "theorem": "3.12",
        "m": "3",
        "locator": "graph",
        "formula": "2/21",
        "oracle": "8/63",
        "match": "false",
        "note": "product has 1 component(s); proof assumed two components",
    }
    assert r.as_json()["match"] is False and r.as_json()["m"] == 3
