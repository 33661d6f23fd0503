import json
import subprocess
import sys

import helpers
from edgering.graph import parse_graph, write_graph


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "edgering.cli", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


def write_file(path, graph, comment=None):
    path.write_text(write_graph(graph, comment=comment))
    return str(path)


def test_analyze_normal(tmp_path):
    path = write_file(tmp_path / "k5.graph", helpers.complete_graph(5))
    proc = run_cli("analyze", "--input", path)
    assert proc.returncode == 0, proc.stderr
    data = json.loads(proc.stdout)
    assert data["verdict"] == "Normal"
    assert "Normal" in proc.stderr


def test_analyze_s2_verified(tmp_path, g33):
    path = write_file(tmp_path / "g33.graph", g33.graph)
    out = tmp_path / "report.json"
    proc = run_cli("analyze", "--input", path, "--output", str(out))
    assert proc.returncode == 0, proc.stderr
    data = json.loads(out.read_text())
    assert data["verdict"] == "NonNormalS2Verified"
    assert data["gap_count"] == 462
    assert data["exhaustive"] is True
    assert proc.stdout == ""


def test_analyze_parse_error(tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("p 3 1\ne 1 9\n")
    proc = run_cli("analyze", "--input", str(bad))
    assert proc.returncode == 2
    assert proc.stderr.strip() != ""


def test_analyze_missing_file(tmp_path):
    proc = run_cli("analyze", "--input", str(tmp_path / "nope.graph"))
    assert proc.returncode == 2


def test_analyze_bipartite_unsupported(tmp_path):
    path = write_file(tmp_path / "c6.graph", helpers.cycle_graph(6))
    proc = run_cli("analyze", "--input", path)
    assert proc.returncode == 3


def test_analyze_unknown_exit_code(tmp_path):
    path = write_file(tmp_path / "pent.graph", helpers.two_pentagons_linked())
    proc = run_cli("analyze", "--input", path, "--degree-bound", "8")
    assert proc.returncode == 4
    data = json.loads(proc.stdout)
    assert data["verdict"] == "Unknown"


def test_family_writes_file_and_sidecar(tmp_path):
    out = tmp_path / "fam.graph"
    proc = run_cli("family", "--d", "7", "--n", "8", "--output", str(out))
    assert proc.returncode == 0, proc.stderr
    g = parse_graph(out.read_text())
    assert g.n_vertices == 7 and g.n_edges == 8
    meta = json.loads((tmp_path / "fam.graph.meta.json").read_text())
    assert meta["a"] == 3 and meta["b"] == 3
    assert meta["d"] == 7 and meta["n"] == 8
    assert meta["labels"]["w"] == 4
    assert [tuple(e) for e in meta["removed_edges"]] == [(1, 4), (2, 4), (4, 5), (4, 6)]


def test_family_stdout_default(tmp_path):
    proc = run_cli("family", "--a", "3", "--b", "4")
    assert proc.returncode == 0
    g = parse_graph(proc.stdout)
    assert g.n_edges == 16


def test_family_bad_dimension():
    proc = run_cli("family", "--d", "6", "--n", "8")
    assert proc.returncode == 2
    assert "d" in proc.stderr


def test_family_conflicting_flags():
    proc = run_cli("family", "--d", "7", "--n", "8", "--a", "3", "--b", "3")
    assert proc.returncode == 2


def test_verify_theorem_single_row(tmp_path):
    out = tmp_path / "thm.json"
    proc = run_cli("verify-theorem", "--d", "7", "--n", "8", "--output", str(out))
    assert proc.returncode == 0, proc.stderr
    data = json.loads(out.read_text())
    assert data["command"] == "verify-theorem"
    assert data["all_s2_verified"] is True
    assert len(data["rows"]) == 1
    row = data["rows"][0]
    assert row["n"] == 8 and row["verdict"] == "NonNormalS2Verified"
    assert row["exhaustive"] is True


def test_verify_theorem_out_of_range():
    proc = run_cli("verify-theorem", "--d", "7", "--n", "13")
    assert proc.returncode == 2
    assert "[8, 12]" in proc.stderr


def test_verify_theorem_tsv():
    proc = run_cli("verify-theorem", "--d", "7", "--n", "8", "--format", "tsv")
    assert proc.returncode == 0
    lines = proc.stdout.strip().split("\n")
    assert lines[0].split("\t") == ["d", "n", "edges", "verdict", "exhaustive", "certificate_count"]
    assert len(lines) == 2
    assert lines[1].split("\t")[:4] == ["7", "8", "8", "NonNormalS2Verified"]


def test_additions_single_edges(tmp_path):
    out = tmp_path / "adds.json"
    proc = run_cli("additions", "--a", "3", "--b", "3", "--max-extra", "1", "--output", str(out))
    assert proc.returncode == 0, proc.stderr
    data = json.loads(out.read_text())
    assert len(data["rows"]) == 9
    assert data["all_rows_expected"] is True
    verdicts = {r["verdict"] for r in data["rows"]}
    assert verdicts <= {"Normal", "NonNormalNotS2"}
    # one cross edge bridges every pair of disjoint triangles here
    assert verdicts == {"Normal"}


def test_additions_bad_max_extra():
    proc = run_cli("additions", "--a", "3", "--b", "3", "--max-extra", "0")
    assert proc.returncode == 2


def test_no_command_shows_usage():
    proc = run_cli()
    assert proc.returncode == 2
