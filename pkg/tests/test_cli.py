import numpy as np
import pytest

from oracles import bell_phi_plus, werner
from tomocorr import TwoQubitState, dump_state_file
from tomocorr.cli import _parse_range, main
from tomocorr.stateio import parse_value, read_report

pytestmark = pytest.mark.filterwarnings("ignore::UserWarning")


def _write_state(tmp_path, matrix, label="probe"):
    path = tmp_path / "state.json"
    dump_state_file(str(path), TwoQubitState.from_matrix(matrix), label=label)
    return str(path)


def test_parse_range_forms():
    assert _parse_range("0.3") == [0.3]
    got = _parse_range("0:1:0.25")
    assert np.allclose(got, [0.0, 0.25, 0.5, 0.75, 1.0])
    # inclusive endpoint survives float accumulation
    assert len(_parse_range("0.05:0.5:0.05")) == 10


def test_parse_range_rejects_garbage():
    import argparse

    for bad in ("1:2", "2:1:0.5", "0:1:-0.1", "a:b:c"):
        with pytest.raises(argparse.ArgumentTypeError):
            _parse_range(bad)


def test_measures_stdout(tmp_path, capsys):
    path = _write_state(tmp_path, bell_phi_plus(), label="phi-plus")
    assert main(["measures", path]) == 0
    out = capsys.readouterr().out
    lines = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert lines["label"] == "phi-plus"
    assert parse_value(lines["mutual_information"]) == pytest.approx(2.0, abs=1e-9)
    assert parse_value(lines["discord_optimal"]) == pytest.approx(1.0, abs=1e-9)
    assert parse_value(lines["entanglement"]) == pytest.approx(1.0, abs=1e-9)
    assert parse_value(lines["asymmetry_quantum"]) == pytest.approx(0.0, abs=1e-9)


def test_measures_csv_output(tmp_path, capsys):
    path = _write_state(tmp_path, werner(0.5))
    out_csv = tmp_path / "report.csv"
    assert main(["measures", path, "--out", str(out_csv)]) == 0
    capsys.readouterr()
    schema, fields, rows = read_report(str(out_csv))
    assert schema == "measures-v1"
    assert len(rows) == 1
    assert parse_value(rows[0]["discord_measured_b"]) == pytest.approx(
        0.262483183764, abs=1e-6
    )


def test_measures_figure(tmp_path, capsys):
    path = _write_state(tmp_path, werner(0.5))
    fig = tmp_path / "schemes.png"
    assert main(["measures", path, "--fig", str(fig)]) == 0
    capsys.readouterr()
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_measures_exit_codes(tmp_path, capsys):
    missing = str(tmp_path / "nope.json")
    assert main(["measures", missing]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"matrix": {"re": ' + str(np.eye(4).tolist()) + "}}", encoding="utf-8")
    assert main(["measures", str(bad)]) == 1
    capsys.readouterr()


def test_random_study_x(tmp_path, capsys):
    out = tmp_path / "study.csv"
    argv = [
        "random-study", "--kind", "x", "--samples", "6", "--seed", "9",
        "--out", str(out),
    ]
    assert main(argv) == 0
    capsys.readouterr()
    schema, fields, rows = read_report(str(out))
    assert schema == "random-study-x-v1"
    assert fields[:7] == ["index", "rho11", "rho22", "rho33", "rho44", "rho14", "rho23"]
    assert len(rows) == 6
    for row in rows:
        assert parse_value(row["min_rule_residual"]) < 1e-3
        assert row["scheme"] in ("diagonalizing", "symmetrizing")
    # same seed, same bytes
    out2 = tmp_path / "study2.csv"
    assert main(argv[:-1] + [str(out2)]) == 0
    capsys.readouterr()
    assert out.read_bytes() == out2.read_bytes()


def test_random_study_mixed_to_stdout(capsys):
    assert main(["random-study", "--kind", "mixed", "--samples", "2", "--seed", "4"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# schema=random-study-mixed-v1\n")
    assert len(out.strip().splitlines()) == 4


def test_ground_sweep_and_figure(tmp_path, capsys):
    out = tmp_path / "ground.csv"
    fig = tmp_path / "ground.png"
    argv = [
        "ground-sweep", "--g-range", "0:0.5:0.1", "--domega", "0",
        "--out", str(out), "--fig", str(fig),
    ]
    assert main(argv) == 0
    capsys.readouterr()
    schema, fields, rows = read_report(str(out))
    assert schema == "ground-sweep-v1"
    assert [row["g"] for row in rows] == ["0", "0.1", "0.2", "0.3", "0.4", "0.5"]
    discords = [parse_value(row["discord_optimal"]) for row in rows]
    assert all(b >= a - 1e-9 for a, b in zip(discords, discords[1:]))
    assert all(row["warning"] == "" for row in rows)
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_ground_sweep_marks_unstable_points(tmp_path, capsys):
    out = tmp_path / "edge.csv"
    assert main(["ground-sweep", "--g-range", "0.8:1.2:0.2", "--out", str(out)]) == 0
    capsys.readouterr()
    _, _, rows = read_report(str(out))
    assert rows[0]["warning"] == ""
    assert rows[1]["warning"] == "unstable-coupling"
    assert rows[2]["warning"] == "unstable-coupling"
    assert rows[1]["mutual_information"] == "undefined"


def test_thermal_sweep_temperature_mode(tmp_path, capsys):
    out = tmp_path / "thermal.csv"
    argv = [
        "thermal-sweep", "--T-range", "0.05:0.3:0.05", "--g", "0.3",
        "--domega", "0", "--out", str(out),
    ]
    assert main(argv) == 0
    capsys.readouterr()
    schema, fields, rows = read_report(str(out))
    assert schema == "thermal-sweep-v1"
    assert len(rows) == 6
    alphas = [parse_value(row["alpha"]) for row in rows]
    assert all(b >= a - 1e-12 for a, b in zip(alphas, alphas[1:]))
    subclasses = {row["subclass"] for row in rows}
    assert subclasses >= {"asymmetric", "symmetric"}


def test_thermal_sweep_detuning_mode_negative_range(tmp_path, capsys):
    out = tmp_path / "det.csv"
    argv = [
        "thermal-sweep", "--domega-range=-0.1:0.1:0.1", "--g", "0.3", "--T", "0.2",
        "--quad-nodes", "128", "--out", str(out),
    ]
    assert main(argv) == 0
    capsys.readouterr()
    _, _, rows = read_report(str(out))
    assert [row["delta_omega"] for row in rows] == ["-0.1", "0", "0.1"]


def test_asymmetry_sweep_sign_structure(tmp_path, capsys):
    out = tmp_path / "asym.csv"
    argv = [
        "asymmetry-sweep", "--domega-range=-0.2:0.2:0.2", "--g", "0.3", "--T", "0.2",
        "--quad-nodes", "128", "--out", str(out),
    ]
    assert main(argv) == 0
    capsys.readouterr()
    schema, _, rows = read_report(str(out))
    assert schema == "asymmetry-sweep-v1"
    red, center, blue = (parse_value(r["asymmetry_quantum"]) for r in rows)
    assert red < -1e-4
    assert abs(center) < 1e-6
    assert blue > 1e-4
    for row in rows:
        da = parse_value(row["discord_measured_a"])
        db = parse_value(row["discord_measured_b"])
        assert da is not None and db is not None


def test_quadrature_failure_exit_code(capsys):
    code = main(
        ["thermal-sweep", "--T-range", "0.2:0.2:0.1", "--g", "0.3", "--quad-nodes", "8"]
    )
    assert code == 3
    assert "error:" in capsys.readouterr().err


def test_unstable_sweep_start_exit_code(capsys):
    code = main(
        ["asymmetry-sweep", "--domega-range", "0:0.1:0.1", "--g", "1.5", "--T", "0.2"]
    )
    assert code == 1
    capsys.readouterr()


def test_grid_flags_validated(tmp_path, capsys):
    path = _write_state(tmp_path, bell_phi_plus())
    assert main(["measures", path, "--grid-theta", "2"]) == 1
    capsys.readouterr()
