import json
import re

from synclcs.cli import main
from synclcs.presets import magic_square_system, one_eq_system, p3_demo_system

TIMESTAMP_LINE = re.compile(r'^\s*"timestamp": .*$', re.MULTILINE)


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def strip_volatile(text: str) -> str:
    return TIMESTAMP_LINE.sub("", text)


def write_preset(capsys, tmp_path, name):
    path = tmp_path / f"{name}.json"
    code, _ = run(capsys, ["examples", name, "--out-file", str(path)])
    assert code == 0
    return str(path)


def test_examples_write_canonical_files(capsys, tmp_path):
    for name, builder in [("magic-square", magic_square_system),
                          ("one-eq", one_eq_system),
                          ("p3-demo", p3_demo_system)]:
        path = tmp_path / f"{name}.json"
        code, out = run(capsys, ["examples", name, "--out-file", str(path)])
        assert code == 0
        report = json.loads(out)
        assert report["system_digest"] == builder().digest()
        assert json.loads(path.read_text()) == builder().to_json()


def test_examples_unknown_name(capsys, tmp_path):
    code, out = run(capsys, ["examples", "nope", "--out-file", str(tmp_path / "x.json")])
    assert code == 2
    assert json.loads(out)["error"]["type"] == "UnknownExample"


def test_validate_magic_square_passes_with_warning(capsys, tmp_path):
    path = write_preset(capsys, tmp_path, "magic-square")
    code, out = run(capsys, ["validate", path])
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["verdict"] == "pass"
    assert any("inconsistent" in rec["message"] for rec in report["checks"]
               if rec["level"] == "warning")


def test_validate_composite_modulus_fails(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"p": 6, "A": [[1, 1]], "b": [0]}))
    code, out = run(capsys, ["validate", str(path)])
    assert code == 2
    assert json.loads(out)["summary"]["verdict"] == "fail"


def test_validate_ragged_rows_is_parse_error(capsys, tmp_path):
    path = tmp_path / "ragged.json"
    path.write_text(json.dumps({"p": 2, "A": [[1, 1], [1]], "b": [0, 0]}))
    code, out = run(capsys, ["validate", str(path)])
    assert code == 3
    assert json.loads(out)["error"]["type"] == "ParseError"


def test_validate_missing_file(capsys, tmp_path):
    code, _ = run(capsys, ["validate", str(tmp_path / "absent.json")])
    assert code == 3


def test_analyze_magic_square(capsys, tmp_path):
    path = write_preset(capsys, tmp_path, "magic-square")
    code, out = run(capsys, ["analyze", path])
    assert code == 0
    report = json.loads(out)
    assert all(row["solutions"] == 4 for row in report["rows"])
    assert report["graphs"]["inhomogeneous"]["vertices"] == 24
    assert report["graphs"]["homogeneous"]["vertices"] == 24
    assert report["classically_solvable"] is False


def test_solve_consistent_system(capsys, tmp_path):
    path = write_preset(capsys, tmp_path, "one-eq")
    code, out = run(capsys, ["solve", path])
    assert code == 0
    report = json.loads(out)
    assert report["best_value"] == "1"
    assert report["perfect_strategy"] == {"1": "(0,0)"}
    assert report["linear_system"]["consistent"] is True


def test_solve_magic_square_best_value(capsys, tmp_path):
    path = write_preset(capsys, tmp_path, "magic-square")
    code, out = run(capsys, ["solve", path])
    assert code == 0
    report = json.loads(out)
    assert report["perfect_strategy"] is None
    assert report["best_value"] == "17/18"  # = 34/36


def test_solve_degenerate_zero_row(capsys, tmp_path):
    path = tmp_path / "zero.json"
    path.write_text(json.dumps({"p": 2, "A": [[0, 0]], "b": [1]}))
    code, out = run(capsys, ["solve", str(path)])
    assert code == 0
    report = json.loads(out)
    assert report["best_value"] == "0"


def test_graph_command_writes_dot(capsys, tmp_path):
    path = write_preset(capsys, tmp_path, "magic-square")
    dot_path = tmp_path / "g.dot"
    code, out = run(capsys, ["graph", path, "--dot", str(dot_path)])
    assert code == 0
    report = json.loads(out)
    assert report["counts"] == {"vertices": 24, "edges": 108}
    assert dot_path.read_text().startswith("graph game_graph {")
    code, out = run(capsys, ["graph", path, "--homogeneous"])
    assert json.loads(out)["homogeneous"] is True


def test_iso_magic_square(capsys, tmp_path):
    path = write_preset(capsys, tmp_path, "magic-square")
    code, out = run(capsys, ["iso", path])
    assert code == 0
    report = json.loads(out)
    assert report["search"]["outcome"] == "exhausted"
    assert "isomorphism" not in report
    assert "translation" not in report


def test_iso_consistent_system(capsys, tmp_path):
    path = write_preset(capsys, tmp_path, "one-eq")
    code, out = run(capsys, ["iso", path])
    assert code == 0
    report = json.loads(out)
    assert report["search"]["outcome"] == "found"
    assert report["translation"]["verified"] is True
    assert report["translation"]["agrees_with_search"] is True


def test_group_command_formats(capsys, tmp_path):
    path = write_preset(capsys, tmp_path, "magic-square")
    code, out = run(capsys, ["group", path])
    report = json.loads(out)
    assert code == 0
    assert report["relation_total"] == 43
    assert len(report["presentation"]["relations"]) == 43
    rel_path = tmp_path / "pres.txt"
    code, out = run(capsys, ["group", path, "--format", "relators",
                             "--presentation-out", str(rel_path)])
    assert code == 0
    text = rel_path.read_text()
    assert "g1^2" in text and "[g1,J]" in text


def test_repcheck_pauli_magic_square(capsys, tmp_path):
    path = write_preset(capsys, tmp_path, "magic-square")
    code, out = run(capsys, ["repcheck", path, "--rep", "pauli-ms"])
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["verdict"] == "pass"
    assert report["summary"]["failures"] == 0
    assert report["summary"]["max_residual"] <= 1e-9
    assert report["tolerance"] == 1e-9


def test_repcheck_scalar_solution_exact(capsys, tmp_path):
    path = write_preset(capsys, tmp_path, "p3-demo")
    code, out = run(capsys, ["repcheck", path, "--rep", "scalar:1,0,0"])
    assert code == 0
    report = json.loads(out)
    assert all(rec["residual"] == 0.0 for rec in report["checks"])


def test_repcheck_scalar_rejects_non_solution(capsys, tmp_path):
    path = write_preset(capsys, tmp_path, "one-eq")
    code, out = run(capsys, ["repcheck", path, "--rep", "scalar:1,0"])
    assert code == 2
    assert json.loads(out)["error"]["type"] == "NotASolution"


def test_repcheck_pauli_requires_magic_square(capsys, tmp_path):
    path = write_preset(capsys, tmp_path, "one-eq")
    code, out = run(capsys, ["repcheck", path, "--rep", "pauli-ms"])
    assert code == 2


def test_repcheck_corrupted_rep_file(capsys, tmp_path):
    from synclcs import pauli_magic_square_rep, representation_to_json

    path = write_preset(capsys, tmp_path, "magic-square")
    doc = representation_to_json(pauli_magic_square_rep())
    # diag entry 1 -> i keeps g1 unitary but breaks its order relation
    doc["generators"]["g1"][0][0] = [0.0, 1.0]
    rep_path = tmp_path / "corrupt.json"
    rep_path.write_text(json.dumps(doc))
    code, out = run(capsys, ["repcheck", path, "--rep", str(rep_path)])
    assert code == 1
    report = json.loads(out)
    assert report["summary"]["verdict"] == "fail"
    assert "first_failure" in report["summary"]


def test_repcheck_unparseable_rep_file(capsys, tmp_path):
    path = write_preset(capsys, tmp_path, "one-eq")
    rep_path = tmp_path / "norep.json"
    rep_path.write_text("{not json")
    code, out = run(capsys, ["repcheck", path, "--rep", str(rep_path)])
    assert code == 3


def test_enum_cap_environment_override(capsys, tmp_path, monkeypatch):
    path = write_preset(capsys, tmp_path, "magic-square")
    monkeypatch.setenv("SYNCLCS_ENUM_CAP", "2")
    code, out = run(capsys, ["analyze", path])
    assert code == 4
    assert json.loads(out)["error"]["type"] == "EnumerationTooLarge"


def test_reports_are_deterministic(capsys, tmp_path):
    commands = []
    for name in ("magic-square", "one-eq", "p3-demo"):
        path = write_preset(capsys, tmp_path, name)
        commands += [
            ["validate", path],
            ["analyze", path],
            ["solve", path],
            ["graph", path],
            ["iso", path],
            ["group", path],
            ["group", path, "--format", "relators"],
        ]
    commands.append(["repcheck", str(tmp_path / "p3-demo.json"), "--rep", "scalar:1,0,0"])
    commands.append(["repcheck", str(tmp_path / "magic-square.json"), "--rep", "pauli-ms"])
    for argv in commands:
        code1, out1 = run(capsys, argv)
        code2, out2 = run(capsys, argv)
        assert code1 == code2
        assert strip_volatile(out1) == strip_volatile(out2), argv


def test_report_written_to_out_file(capsys, tmp_path):
    path = write_preset(capsys, tmp_path, "one-eq")
    out_path = tmp_path / "report.json"
    code, out = run(capsys, ["--out", str(out_path), "validate", path])
    assert code == 0
    assert out_path.read_text() == out


def test_search_budget_environment_override(capsys, tmp_path, monkeypatch):
    path = write_preset(capsys, tmp_path, "magic-square")
    monkeypatch.setenv("SYNCLCS_SEARCH_BUDGET", "5")
    code, out = run(capsys, ["iso", path])
    assert code == 4
    assert json.loads(out)["error"]["type"] == "SearchBudgetExceeded"
