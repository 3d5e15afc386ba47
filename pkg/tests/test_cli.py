import csv
import io
import json

import pytest

from harmonic_products.centrality import centrality_profile
from harmonic_products.cli import main
from harmonic_products.families import generate
from harmonic_products.numeric import format_rational, parse_rational


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_path(capsys):
    code, out, _ = run(capsys, "gen", "--family", "path", "--m", "3")
    assert code == 0 and out == "n 3\n0 1\n1 2\n"


def test_gen_fan(capsys):
    code, out, _ = run(capsys, "gen", "--family", "fan", "--m", "3")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n 4" and len(lines) == 6


def test_gen_invalid(capsys):
    code, _, err = run(capsys, "gen", "--family", "cycle", "--m", "2")
    assert code == 1 and "cycle requires m >= 3" in err


def test_argparse_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as info:
        main(["gen", "--family", "blob", "--m", "3"])
    assert info.value.code == 1


def test_product_outputs(capsys, tmp_path):
    code, out, _ = run(capsys, "product", "--op", "cartesian", "--left", "family:path:2", "--right", "family:path:3")
    assert code == 0 and out.splitlines()[0] == "n 6" and len(out.splitlines()) == 8

    code, out, _ = run(capsys, "product", "--op", "direct", "--left", "family:path:2", "--right", "family:cycle:4", "--format", "json")
    doc = json.loads(out)
    assert doc["order"] == 8 and len(doc["edges"]) == 8 and doc["labels"][5] == "(1,1)"

    target = tmp_path / "k.el"
    code, _, _ = run(capsys, "product", "--op", "direct", "--left", "family:path:2", "--right", "family:path:2", "--out", str(target))
    assert target.read_text() == "n 4\n0 3\n1 2\n"
    assert (tmp_path / "k.el.labels").read_text().startswith("0 (0,0)\n")


def test_product_unreadable(capsys, tmp_path):
    code, _, err = run(capsys, "product", "--op", "direct", "--left", str(tmp_path / "nope"), "--right", "family:path:2")
    assert code == 1 and "cannot read" in err


def test_centrality_k2(capsys, tmp_path):
    path = tmp_path / "k2.el"
    path.write_text("n 2\n0 1\n")
    code, out, _ = run(capsys, "centrality", str(path))
    assert code == 0
    assert out == "vertex,label,R,H\n0,0,1,1\n1,1,1,1\n#centralization,undefined\n"


def test_centrality_family_operand(capsys):
    code, out, _ = run(capsys, "centrality", "family:path:3")
    assert code == 0
    assert out == "vertex,label,R,H\n0,v1,3/2,3/4\n1,v2,2,1\n2,v3,3/2,3/4\n#centralization,1\n"


def test_centrality_pipeline(capsys, tmp_path):
    ladder = tmp_path / "ladder.el"
    run(capsys, "product", "--op", "cartesian", "--left", "family:path:2", "--right", "family:path:3", "--out", str(ladder))
    code, out, _ = run(capsys, "centrality", str(ladder))
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["vertex", "label", "R", "H"]
    hs = {r[1]: r[3] for r in rows[1:-1]}
    assert hs == {"(0,0)": "2/3", "(0,1)": "4/5", "(0,2)": "2/3", "(1,0)": "2/3", "(1,1)": "4/5", "(1,2)": "2/3"}
    assert rows[-1] == ["#centralization", "4/15"]

    prism = tmp_path / "prism.el"
    run(capsys, "product", "--op", "cartesian", "--left", "family:path:2", "--right", "family:cycle:3", "--out", str(prism))
    code, out, _ = run(capsys, "centrality", str(prism), "--format", "json")
    doc = json.loads(out)
    assert {v["H"] for v in doc["vertices"]} == {"4/5"}
    assert doc["centralization"] == "0" and doc["argmax"] == list(range(6))


def test_centrality_errors(capsys, tmp_path):
    code, _, err = run(capsys, "centrality", "family:path:1")
    assert code == 1 and "degenerate" in err
    code, _, err = run(capsys, "centrality", "family:path:3", "--format", "dot")
    assert code == 1
    bad = tmp_path / "bad.el"
    bad.write_text("n 2\n0 0\n")
    code, _, err = run(capsys, "centrality", str(bad))
    assert code == 1 and "self-loop" in err


@pytest.mark.parametrize("family, m", [("path", 5), ("fan", 4), ("cycle", 6), ("star", 3)])
def test_gen_round_trip_and_rational_text(capsys, tmp_path, family, m):
    path = tmp_path / "g.el"
    run(capsys, "gen", "--family", family, "--m", str(m), "--out", str(path))
    _, out, _ = run(capsys, "centrality", str(path))
    rows = list(csv.reader(io.StringIO(out)))[1:-1]
    report = centrality_profile(generate(family, m))
    assert [parse_rational(r[3]) for r in rows] == [v.H for v in report.per_vertex]
    assert [parse_rational(r[2]) for r in rows] == [v.R for v in report.per_vertex]
    assert all(format_rational(parse_rational(r[3])) == r[3] for r in rows)


def test_verify_all_match(capsys):
    code, out, err = run(capsys, "verify", "--theorem", "3.6", "--m-min", "3", "--m-max", "20")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 18 and all(r["match"] == "true" for r in rows)
    assert "theorem 3.6: checked=18 matched=18 mismatched=0" in err


def test_verify_fail_on_mismatch(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "3.12", "--m-min", "3", "--m-max", "8", "--fail-on-mismatch")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 2 and rows and all(r["match"] == "false" for r in rows)
    code, _, _ = run(capsys, "verify", "--theorem", "3.12", "--m-min", "3", "--m-max", "8")
    assert code == 0


def test_verify_all_single_m(capsys):
    code, out, err = run(capsys, "verify", "--theorem", "all", "--m-min", "3", "--m-max", "3", "--format", "json")
    records = json.loads(out)
    assert code == 0
    assert {r["theorem"] for r in records} == {f"3.{i}" for i in range(1, 13)}
    assert set(records[0]) == {"theorem", "m", "locator", "formula", "oracle", "match", "note"}
    assert err.count("theorem ") == 12


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "--theorem", "3.13")[0] == 1
    assert run(capsys, "verify", "--m-min", "9", "--m-max", "3")[0] == 1


def test_export_dot(capsys, tmp_path):
    path = tmp_path / "k2.el"
    path.write_text("n 2\n0 1\n")
    code, out, _ = run(capsys, "export-dot", str(path))
    assert code == 0 and out == "graph {\n  0 -- 1;\n}\n"
    empty = tmp_path / "empty.el"
    empty.write_text("n 0\n")
    assert run(capsys, "export-dot", str(empty))[0] == 1
    code, out, _ = run(capsys, "gen", "--family", "fan", "--m", "3", "--format", "dot")
    assert out.count("--") == 5
