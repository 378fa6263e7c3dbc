import json

import numpy as np
import pytest

from oracles import bell_phi_plus
from tomocorr import (
    StateFileError,
    TraceNotOne,
    TwoQubitState,
    dump_state_file,
    load_state_file,
)
from tomocorr.stateio import (
    UNDEFINED,
    format_value,
    parse_value,
    read_report,
    write_report,
)


@pytest.fixture
def bell_state():
    return TwoQubitState.from_matrix(bell_phi_plus())


def test_state_file_round_trip(tmp_path, bell_state):
    path = tmp_path / "bell.json"
    dump_state_file(str(path), bell_state, label="phi-plus")
    state, label = load_state_file(str(path))
    assert label == "phi-plus"
    assert np.max(np.abs(state.matrix - bell_state.matrix)) < 1e-15


def test_state_file_imaginary_parts(tmp_path):
    m = np.diag([0.4, 0.1, 0.1, 0.4]).astype(complex)
    m[0, 3] = 0.1j
    m[3, 0] = -0.1j
    path = tmp_path / "y.json"
    dump_state_file(str(path), TwoQubitState.from_matrix(m))
    state, label = load_state_file(str(path))
    assert label == "state"
    assert state.matrix[0, 3] == pytest.approx(0.1j, abs=1e-15)


def test_missing_file_is_a_file_error(tmp_path):
    with pytest.raises(StateFileError):
        load_state_file(str(tmp_path / "absent.json"))


def test_malformed_json_is_a_file_error(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json", encoding="utf-8")
    with pytest.raises(StateFileError):
        load_state_file(str(p))


@pytest.mark.parametrize(
    "doc",
    [
        [1, 2, 3],
        {"label": "x"},
        {"matrix": {"im": [[0] * 4] * 4}},
        {"matrix": {"re": [[0.25] * 4] * 3}},
        {"matrix": {"re": [["a"] * 4] * 4}},
        {"matrix": {"re": [[0.25] * 4] * 4}, "label": 7},
    ],
)
def test_structural_problems_are_file_errors(tmp_path, doc):
    p = tmp_path / "doc.json"
    p.write_text(json.dumps(doc), encoding="utf-8")
    with pytest.raises(StateFileError):
        load_state_file(str(p))


def test_physics_problems_keep_their_own_type(tmp_path):
    p = tmp_path / "unnormalized.json"
    p.write_text(json.dumps({"matrix": {"re": np.eye(4).tolist()}}), encoding="utf-8")
    with pytest.raises(TraceNotOne):
        load_state_file(str(p))


def test_format_value():
    assert format_value(None) == UNDEFINED == "undefined"
    assert format_value("sym") == "sym"
    assert format_value(3) == "3"
    assert format_value(0.25) == "0.25"
    # nine significant digits
    assert format_value(1.0 / 3.0) == "0.333333333"


def test_parse_value_inverts_format():
    assert parse_value("undefined") is None
    assert parse_value("0.333333333") == pytest.approx(1.0 / 3.0, abs=1e-9)


def test_report_round_trip(tmp_path):
    path = tmp_path / "table.csv"
    rows = [(0, 0.5, None, "diag"), (1, 1.0 / 7.0, 2.0, "sym")]
    write_report(str(path), "demo-v1", ("index", "a", "b", "tag"), rows)
    text = path.read_text(encoding="utf-8")
    assert text.startswith("# schema=demo-v1\n")
    assert "\r" not in text
    schema, fields, back = read_report(str(path))
    assert schema == "demo-v1"
    assert fields == ["index", "a", "b", "tag"]
    assert back[0]["b"] == "undefined"
    assert parse_value(back[1]["a"]) == pytest.approx(1.0 / 7.0, abs=1e-9)
    assert back[1]["tag"] == "sym"


def test_report_to_stdout(capsys):
    write_report(None, "demo-v1", ("x",), [(1.5,)])
    out = capsys.readouterr().out
    assert out == "# schema=demo-v1\nx\n1.5\n"


def test_read_report_requires_schema_line(tmp_path):
    p = tmp_path / "plain.csv"
    p.write_text("a,b\n1,2\n", encoding="utf-8")
    with pytest.raises(StateFileError):
        read_report(str(p))
