import csv
import io
import json
import subprocess
import sys

import pytest

from gendijkstra.cli import main
from gendijkstra.tree import load_result


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_fig1(capsys, fixtures_dir, tmp_path):
    out_file = tmp_path / "r.json"
    code, _, _ = run(capsys, "solve", "--graph", fixtures_dir / "fig1.json", "--source", 0, "--output", out_file)
    assert code == 0
    assert out_file.read_bytes() == (fixtures_dir / "fig1_result.json").read_bytes()
    _, sets = load_result(out_file.read_text())
    assert [l.pair for l in sets[2]] == [(1, 0, 2)]


def test_solve_no_prune_to_stdout(capsys, fixtures_dir):
    code, out, _ = run(capsys, "solve", "--graph", fixtures_dir / "fig1.json", "--no-prune")
    assert code == 0
    assert out == (fixtures_dir / "fig1_result.json").read_text()


def test_solve_trivial(capsys, fixtures_dir):
    code, out, _ = run(capsys, "solve", "--graph", fixtures_dir / "trivial.json", "--source", 0)
    assert code == 0
    assert json.loads(out) == {"source": 0, "vertices": [{"id": 0, "labels": [{"cost": 0, "ri": [0, 1], "path": []}]}]}


def test_solve_errors(capsys, fixtures_dir, tmp_path):
    code, _, err = run(capsys, "solve", "--graph", tmp_path / "missing.json")
    assert code == 1 and "cannot read" in err
    bad = tmp_path / "bad.json"
    bad.write_text('{"units": 2, "vertices": 1, "edges": [{"id": 0, "source": 0, "target": 3, "cost": 1, "au": [[0, 1]]}]}')
    code, _, err = run(capsys, "solve", "--graph", bad)
    assert code == 1 and "edge 0" in err and "target" in err
    code, _, err = run(capsys, "solve", "--graph", fixtures_dir / "fig1.json", "--source", 9)
    assert code == 2 and "source" in err
    with pytest.raises(SystemExit) as info:
        main(["solve"])
    assert info.value.code == 2


def test_compare_fig1(capsys, fixtures_dir):
    code, out, _ = run(capsys, "compare", "--graph", fixtures_dir / "fig1.json")
    assert code == 0 and "MATCH" in out and "MISMATCH" not in out


def test_compare_generated_campaign(capsys):
    code, out, _ = run(capsys, "compare", "--count", 25, "--seed", 42, "--vertices", 12, "--edges", 40, "--units", 6)
    assert code == 0
    assert out.count(": MATCH") == 25
    assert "summary: 25 instance(s), all MATCH" in out


def test_compare_cost_only_build_mismatches(capsys, fixtures_dir):
    code, out, _ = run(capsys, "compare", "--graph", fixtures_dir / "fig1.json", "--queue-order", "cost-only")
    assert code == 3
    assert "MISMATCH" in out and "engine:" in out and "oracle:" in out


def test_gen(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert run(capsys, "gen", "--seed", 1, "--vertices", 5, "--edges", 9, "--units", 4, "--output", p)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    code, out, _ = run(capsys, "gen", "--seed", 1, "--fill", 1.0, "--units", 3, "--edges", 4)
    assert code == 0
    assert all(e["au"] == [[0, 3]] for e in json.loads(out)["edges"])
    code, out, _ = run(capsys, "gen", "--fill", 0.0, "--edges", 4)
    assert all(e["au"] == [] for e in json.loads(out)["edges"])


def test_gen_errors(capsys, tmp_path):
    code, _, err = run(capsys, "gen", "--output", tmp_path / "nope" / "g.json")
    assert code == 1 and "cannot write" in err
    code, _, err = run(capsys, "gen", "--fill", 2)
    assert code == 2


def _tamper(path, fn):
    doc = json.loads(path.read_text())
    fn(doc)
    path.write_text(json.dumps(doc))


def test_check(capsys, fixtures_dir, tmp_path):
    graph = fixtures_dir / "fig1.json"
    code, out, _ = run(capsys, "check", "--graph", graph, "--source", 0, "--result", fixtures_dir / "fig1_result.json")
    assert code == 0 and out.strip() == "PASS"

    removed = tmp_path / "removed.json"
    removed.write_text((fixtures_dir / "fig1_result.json").read_text())
    _tamper(removed, lambda d: d["vertices"][2]["labels"].clear())
    code, out, _ = run(capsys, "check", "--graph", graph, "--result", removed)
    assert code == 3 and out.splitlines()[0] == "FAIL/missing"
    assert json.loads(out.splitlines()[1])["kind"] == "missing"

    added = tmp_path / "added.json"
    added.write_text((fixtures_dir / "fig1_result.json").read_text())
    _tamper(added, lambda d: d["vertices"][2]["labels"].append({"cost": 1, "ri": [0, 1], "path": [0]}))
    code, out, _ = run(capsys, "check", "--graph", graph, "--result", added)
    assert code == 3 and out.splitlines()[0] == "FAIL/dominated"

    broken = tmp_path / "broken.json"
    broken.write_text("{")
    code, _, err = run(capsys, "check", "--graph", graph, "--result", broken)
    assert code == 1


def test_bench_csv(capsys, tmp_path):
    code, out, _ = run(capsys, "bench", "--units", "2,4,8,16", "--vertices", 10, "--edges", 30, "--count", 1)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {int(r["units"]) for r in rows} == {2, 4, 8, 16}
    for r in rows:
        assert int(r["max_labels"]) <= int(r["antichain_bound"]) == int(r["units"]) * (int(r["units"]) + 1) // 2
        assert int(r["popped"]) <= int(r["popped_bound"])


def test_bench_trivial_json(capsys):
    code, out, _ = run(capsys, "bench", "--units", "1", "--vertices", 1, "--edges", 0, "--count", 1, "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["popped"] == 1 and rows[0]["median_s"] < 0.1


def test_module_entry_point(fixtures_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "gendijkstra", "solve", "--graph", str(fixtures_dir / "fig1.json")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == (fixtures_dir / "fig1_result.json").read_text()
