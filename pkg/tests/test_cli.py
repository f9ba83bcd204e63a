import json

import pytest

from hilbstrata.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main, parse_delta, InputError
from hilbstrata.staircase import StandardSet

SQ = "[[0,0],[1,0],[0,1],[1,1]]"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_staircase_report(capsys):
    code, out, _ = run(capsys, "staircase", "--delta", SQ)
    rep = json.loads(out)
    assert code == EXIT_OK
    assert sorted(map(tuple, rep["corners"])) == [(0, 2), (2, 0)]
    assert rep["counts"] == {"r": 4, "corners": 2, "border": 4, "edge_points": 1}
    assert rep["edge_points"] == [[1, 1]]
    assert sorted(map(tuple, rep["iterated_borders"]["1"])) == [(0, 2), (1, 2), (2, 0), (2, 1)]


def test_staircase_origin(capsys):
    code, out, _ = run(capsys, "staircase", "--delta", '{"n": 3, "elements": [[0,0,0]]}')
    rep = json.loads(out)
    units = [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert code == EXIT_OK and sorted(map(tuple, rep["border"])) == units
    assert sorted(map(tuple, rep["corners"])) == units


@pytest.mark.parametrize("bad", ["[[1,0]]", "[[0,0],[2,0]]", "not json", '{"elements": []}', "[[0,0],[0,0,0]]"])
def test_invalid_delta_exits_2(capsys, bad):
    code, _, err = run(capsys, "staircase", "--delta", bad)
    assert code == EXIT_INPUT and "error" in err


def test_parse_delta_from_file(tmp_path):
    f = tmp_path / "d.json"
    f.write_text(SQ)
    assert parse_delta(str(f)) == StandardSet.of([(0, 0), (1, 0), (0, 1), (1, 1)])
    with pytest.raises(InputError):
        parse_delta("3")


def test_equations_counts(capsys):
    code, out, _ = run(capsys, "equations", "--delta", SQ)
    data = json.loads(out)
    labels = [g["label"] for g in data["generators"]]
    assert code == EXIT_OK and labels.count("I2") == 8 and labels.count("I3e") == 4


def test_equations_axis_minimal(capsys):
    code, out, _ = run(capsys, "equations", "--delta", "[[0,0],[1,0],[2,0]]", "--which", "minimal",
                       "--order", "lex", "--vars", "2,1")
    data = json.loads(out)
    assert code == EXIT_OK
    assert len(data["variables"]) == 6 and data["generators"] == []


def test_equations_deterministic_and_files(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["equations", "--delta", SQ, "--out", str(a)]) == EXIT_OK
    assert main(["equations", "--delta", SQ, "--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    code, out, _ = run(capsys, "equations", "--delta", SQ, "--export", "cas")
    assert code == EXIT_OK and "T_1_2__0_0" in out


def test_equations_bad_choice():
    with pytest.raises(SystemExit) as exc:
        main(["equations", "--delta", SQ, "--which", "nonsense"])
    assert exc.value.code == 2


def test_equations_bad_order(capsys):
    code, _, _ = run(capsys, "equations", "--delta", SQ, "--order", "w:1:lex", "--which", "stratum")
    assert code == EXIT_INPUT


def test_verify_exit_codes(capsys, tmp_path):
    code, out, err = run(capsys, "verify", "--suite", "golden")
    assert code == EXIT_FAIL and "failing" in err
    assert json.loads(out)["passed"] is False
    f = tmp_path / "deform.json"
    code, _, _ = run(capsys, "verify", "--suite", "deform", "--max-r", "3", "--out", str(f))
    rep = json.loads(f.read_text())
    assert code == EXIT_OK and rep["passed"] and rep["cases"] > 0


def test_gluing_and_deform(capsys):
    code, out, _ = run(capsys, "gluing", "--delta", "[[0,0],[1,0]]", "--eps", "[[0,0],[0,1]]")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["intersection_det"] != "0"
    code, out, _ = run(capsys, "deform", "--delta", SQ)
    rep = json.loads(out)
    assert code == EXIT_OK and rep["weights"] == [2, 1]
    assert all(g["w"] > 0 for g in rep["generators"])
