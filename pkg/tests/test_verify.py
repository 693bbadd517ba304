import json

import pytest
from click.testing import CliRunner

from clusterlab.cli import main
from clusterlab.verify import (
    VerifyReport, enumerate_gentle_algebras, verify_denominator,
    verify_denominator_duality, verify_fvector_injectivity, verify_thm1,
    verify_thm2, verify_type_c_categorification, write_report,
)


def test_report_round_trip(tmp_path):
    r = VerifyReport("demo", {"x": 1})
    r.counts = {"n": 2}
    path = write_report(r, tmp_path)
    path2 = write_report(r, tmp_path)
    assert path == path2  # same parameters, same file
    lines = path.read_text().strip().splitlines()
    assert len(lines) == 2  # append-only
    data = json.loads(lines[0])
    assert data["experiment"] == "demo" and data["verdict"] == "pass"


def test_fail_reports_carry_witnesses():
    r = VerifyReport("demo", {})
    r.fail({"reason": "example"})
    assert r.verdict == "fail" and r.witnesses


def test_thm1_small_run():
    r = verify_thm1(5, 2)
    assert r.verdict == "pass"
    assert r.counts["tilings"] == 7  # 2 square tilings + 5 pentagon ones
    assert r.counts["forbidden"] == 0


def test_thm1_finds_octagon_converse():
    r = verify_thm1(8, 3, geometric_cross_check=False)
    assert r.verdict == "pass"
    assert r.counts["converse_witnesses"] == 2
    assert r.counts["forbidden"] == 2


def test_thm2_small_bounds():
    r = verify_thm2(2, 3)
    assert r.verdict == "pass"
    assert r.counts["with_even_cycle"] >= 1  # the 2-cycle with full relations
    assert r.counts["without_even_cycle"] >= 2


def test_gentle_enumeration_small():
    algs = enumerate_gentle_algebras(1, 1)
    # one vertex: the trivial algebra (no arrows is excluded; a loop with
    # or without the square relation)
    assert len(algs) == 2
    algs = enumerate_gentle_algebras(2, 2)
    names = {(len(q.arrows), len(q.relations)) for q in algs}
    assert (2, 2) in names  # the 2-cycle with full relations appears


def test_fvector_harness():
    r = verify_fvector_injectivity(3, 2)
    assert r.verdict == "pass"
    assert r.counts["triangulations_cross_checked"] == 19  # 5 + 14


def test_denominator_harness_root_only():
    r = verify_denominator("A", 2, 3, "root")
    assert r.verdict == "pass" and r.counts["reroots"] == 0


def test_denominator_duality():
    r = verify_denominator_duality(2, 2, "root")
    assert r.verdict == "pass"
    assert r.counts["verdicts"] == {"B": "pass", "C": "pass"}


def test_type_c_rejects_rank_one():
    with pytest.raises(ValueError):
        verify_type_c_categorification(1)


def test_cli_explore_and_reports(tmp_path):
    runner = CliRunner()
    matrix = tmp_path / "b.json"
    matrix.write_text('{"n": 2, "B": [[0, 1], [-1, 0]]}')
    res = runner.invoke(main, ["explore", "--matrix", str(matrix),
                               "--format", "json"])
    assert res.exit_code == 0, res.output
    data = json.loads(res.output)
    assert data["clusters"] == 5 and data["type"] == "A2"

    res = runner.invoke(main, ["mutate", "--matrix", str(matrix),
                               "--seq", "1", "--format", "json"])
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["cluster"][0] == "x1^-1 * x2 + x1^-1"

    out = tmp_path / "result.json"
    res = runner.invoke(main, ["verify", "type-c", "--rank-max", "2",
                               "--report-dir", str(tmp_path / "reports"),
                               "--out", str(out)])
    assert res.exit_code == 0, res.output
    assert json.loads(out.read_text())["verdict"] == "pass"
    assert list((tmp_path / "reports").glob("*.jsonl"))


def test_cli_tiling_commands(tmp_path):
    runner = CliRunner()
    tiling = tmp_path / "t.json"
    tiling.write_text(json.dumps(
        {"surface": "disc", "marked": 5, "chords": [[1, 3], [1, 4]]}))
    res = runner.invoke(main, ["tiling", "classify", "--tiling", str(tiling),
                               "--format", "json"])
    assert res.exit_code == 0
    assert json.loads(res.output)["forbidden_scan_passes"] is True
    res = runner.invoke(main, ["tiling", "arcs", "--tiling", str(tiling),
                               "--format", "json"])
    assert res.exit_code == 0
    assert len(json.loads(res.output)["arcs"]) == 3
    hole = tmp_path / "hole.json"
    hole.write_text(json.dumps(
        {"surface": "one-holed-disc", "marked": 2, "occ_chords": []}))
    res = runner.invoke(main, ["tiling", "algebra", "--tiling", str(hole),
                               "--format", "json"])
    assert res.exit_code == 0
    assert json.loads(res.output)["relations"] == [["r0_0", "r0_0"]]


def test_cli_gentle_analyze(tmp_path):
    runner = CliRunner()
    quiver = tmp_path / "q.json"
    quiver.write_text(json.dumps({
        "vertices": 1,
        "arrows": [{"id": "rho", "src": 1, "tgt": 1}],
        "relations": [["rho", "rho"]]}))
    res = runner.invoke(main, ["gentle", "analyze", "--quiver", str(quiver),
                               "--format", "json"])
    assert res.exit_code == 0, res.output
    data = json.loads(res.output)
    assert data["gentle"] is True
    assert data["cartan_determinant"] == 2
    assert [m["dim"] for m in data["tau_rigid"]] == [[2]]
