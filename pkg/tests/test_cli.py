import json

import numpy as np
import pytest

from sparkframe.cli import main, run_verification
from sparkframe.fileio import (
    FrameFormatError,
    frame_from_csv,
    frame_from_json,
    frame_to_csv,
    frame_to_json,
    read_frame,
)
from sparkframe.framecore import GeneratingVector, full_spark_exact, orbit_frame
from sparkframe.genfamily import ExponentFamily
from sparkframe.groups import SemidirectGroup, induced_rep


def _run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_exact_round_trip():
    rep = induced_rep(SemidirectGroup.of(5), 1)
    frame = orbit_frame(rep, GeneratingVector.random(2))
    back = frame_from_json(frame_to_json(frame))
    assert back == frame and back.provenance == json.loads(json.dumps(frame.provenance))
    poly = orbit_frame(ExponentFamily((1, 2), (0, 3)), GeneratingVector.exact(["1/3", 2]))
    assert frame_from_json(frame_to_json(poly)) == poly


def test_numeric_round_trip():
    frame = orbit_frame(ExponentFamily((1, 2, 3, 4), range(7)), GeneratingVector.numeric([1, 2, 3, 4]), "numeric")
    assert frame_from_json(frame_to_json(frame)) == frame
    back = frame_from_csv(frame_to_csv(frame))
    assert np.array_equal(back.array, frame.array)
    assert frame_to_csv(frame).splitlines()[0] == "col,row,re,im"


def test_malformed():
    with pytest.raises(FrameFormatError):
        frame_from_json('{"dim": 2')
    with pytest.raises(FrameFormatError):
        frame_from_json('{"dim": 2, "count": 1, "mode": "numeric", "columns": []}')


def test_construct_verify_round_trip(tmp_path, capsys):
    path = str(tmp_path / "z6.json")
    assert main(["construct", "--group", "6", "--subgroup", "1,5", "--xi", "1",
                 "--vector", "random:42", "--out", path]) == 0
    frame = read_frame(path)
    assert (frame.dim, frame.count) == (2, 12)
    code, out = _run(["verify", path, "--threads", "1"], capsys)
    cert = json.loads(out)
    assert code == 1 and cert["failing_subset"] == [0, 6]
    direct = full_spark_exact(orbit_frame(induced_rep(SemidirectGroup.of(6, [1, 5]), 1),
                                          GeneratingVector.random(42)), threads=1).to_dict()
    assert {k: cert[k] for k in direct} == direct


def test_verify_z5_exit_zero(tmp_path, capsys):
    path = str(tmp_path / "z5.json")
    assert main(["construct", "--group", "5", "--subgroup", "1,2,3,4", "--xi", "1",
                 "--vector", "monomial-squares", "--mode", "exact", "--out", path]) == 0
    code, out = _run(["verify", path, "--threads", "1"], capsys)
    cert = json.loads(out)
    assert code == 0 and cert["minors_checked"] == 4845
    for key in ("verdict", "mode", "tolerance", "minors_checked", "min_abs_det", "failing_subset",
                "column_order", "h_enumeration", "tool_version", "threads", "elapsed_ms"):
        assert key in cert


def test_verify_truncated_exit_two(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 4, "count"')
    assert main(["verify", str(path)]) == 2


def test_budget_exit_two(tmp_path, capsys):
    path = str(tmp_path / "z5.json")
    main(["construct", "--group", "5", "--out", path])
    assert main(["verify", path, "--budget", "10"]) == 2


def test_env_threads(tmp_path, capsys, monkeypatch):
    path = str(tmp_path / "z6.json")
    main(["construct", "--group", "6", "--subgroup", "1,5", "--out", path])
    monkeypatch.setenv("SPARKFRAME_THREADS", "2")
    code, out = _run(["verify", path, "--threads", "1"], capsys)
    assert json.loads(out)["threads"] == 2


def test_family_construct_and_bounds(tmp_path, capsys):
    path = str(tmp_path / "s2.json")
    assert main(["construct", "--xi-list", "1,2,3,4", "--lambda-list", "0,1,2,3,4,5,6",
                 "--tau", "transcendental", "--vector", "explicit:1,2,3,4", "--mode", "float",
                 "--out", path]) == 0
    assert read_frame(path).count == 28
    code, out = _run(["bounds", path], capsys)
    rep = json.loads(out)
    assert 170 <= rep["A"] <= 180 and 252 <= rep["B"] <= 264 and not rep["tight"]
    csv_path = str(tmp_path / "s2.csv")
    assert main(["construct", "--xi-list", "1,2,3,4", "--lambda-list", "0,1,2,3,4,5,6",
                 "--vector", "explicit:1,2,3,4", "--mode", "float", "--format", "csv",
                 "--out", csv_path]) == 0
    assert np.allclose(read_frame(csv_path).array, read_frame(path).array)


def test_criteria_commands(capsys):
    code, out = _run(["criteria", "uniform", "--n", "6", "--set", "1,5"], capsys)
    assert code == 0 and json.loads(out)["ok"] is False
    _, out = _run(["criteria", "tight-columns", "--group", "5", "--subgroup", "1,2,3,4", "--xi", "1"], capsys)
    assert json.loads(out)["ok"] is True
    _, out = _run(["criteria", "consecutive", "--group", "5", "--subgroup", "1,2,3,4", "--xi", "1"], capsys)
    assert json.loads(out)["ok"] is True
    _, out = _run(["criteria", "evans", "--n", "5", "--a", "1,2,3,4", "--b", "0,1,2,3,4"], capsys)
    assert json.loads(out)["minors_checked"] == 126


def test_simulate_and_deficiency(tmp_path, capsys):
    path = str(tmp_path / "z5.json")
    main(["construct", "--group", "5", "--out", path])
    code, out = _run(["simulate", path, "--trials", "100", "--seed", "1"], capsys)
    assert code == 0 and json.loads(out)["max_error"] < 1e-8
    code, out = _run(["deficiency", "--group", "9", "--subgroup", "1,8", "--xi", "1"], capsys)
    assert json.loads(out)["verdict"] == "FullSparkConstructible"


def test_errors(capsys):
    assert main(["construct", "--group", "6", "--subgroup", "1,2"]) == 2
    assert main(["construct", "--xi-list", "1,2", "--lambda-list", "0,1", "--tau", "sqrt(2)"]) == 2
    assert main(["construct", "--group", "5", "--vector", "monomial:0,1"]) == 2
