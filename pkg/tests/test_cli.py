import json

import pytest

from reesgamma.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_json_lines(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemma32", "--n", "3")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 1 and lines[0]["status"] == "pass" and lines[0]["elapsed_ms"] is None


def test_verify_verbose_includes_timing(capsys):
    _, out, _ = run(capsys, "verify", "--suite", "lemma32", "--n", "2", "-v")
    assert json.loads(out)["elapsed_ms"] is not None


def test_verify_markdown(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "toric", "--n", "2", "--format", "md")
    assert code == 0
    assert out.rstrip().endswith("1 passed, 0 failed, 0 skipped")


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "nosuch"],
    ["verify", "--suite", "kn", "--n", "9"],
    ["verify", "--suite", "gessel", "--t", "1"],
    ["verify", "--jobs", "0"],
    ["table", "--which", "xi", "--n", "9"],
    ["poset", "--family", "boolean"],
    ["poset", "--family", "rees", "--left", "boolean:3:nope", "--right", "tree:1:2"],
    ["poset", "--family", "ij", "--n", "3", "--j", "3"],
])
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse rejects unknown choices itself
        code = exc.code
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_failure_exit_code(capsys, monkeypatch):
    from reesgamma import verify as vf
    bad = vf.CheckReport("lemma32", "x", {}, "fail", "1", "2")
    monkeypatch.setattr(vf, "run_suite", lambda *a, **k: iter([bad]))
    code, out, _ = run(capsys, "verify", "--suite", "lemma32")
    assert code == 1 and json.loads(out)["status"] == "fail"


def test_table_markdown(capsys):
    code, out, _ = run(capsys, "table", "--which", "gamma", "--n", "4")
    assert code == 0
    assert "| (2,1,1) | 3 | 0 | 2 |" in out


def test_table_json_type_B(capsys):
    code, out, _ = run(capsys, "table", "--which", "gamma-plus", "--n", "2", "--format", "json")
    doc = json.loads(out)
    shapes = {row["shape"]: row["coefficients"] for row in doc["rows"]}
    assert code == 0 and doc["which"] == "gamma-plus"
    assert shapes["((1,1),())"] == {"0": 1}


def test_poset_info(capsys):
    code, out, _ = run(capsys, "poset", "--family", "boolean", "--n", "3", "--format", "json")
    info = json.loads(out)
    assert code == 0
    assert info["elements"] == 8 and info["rank"] == 3 and info["maximal_chains"] == 6
    assert info["group"] == "S_3"


def test_poset_rees_info(capsys):
    code, out, _ = run(capsys, "poset", "--family", "rees", "--left", "boolean:3:punctured",
                       "--right", "tree:1:2", "--format", "json")
    info = json.loads(out)
    assert code == 0 and not info["has_bottom"] and info["lefschetz_dim"] == 2


def test_poset_export(capsys):
    code, out, _ = run(capsys, "poset", "--family", "boolean", "--n", "2", "--export")
    assert code == 0 and out.splitlines()[0] == "0\t()\t(1)"
