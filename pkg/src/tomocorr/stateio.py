"""State files and delimited report output.

State files are JSON: a 4x4 matrix split into "re" and "im" parts plus an
optional "label".  Reports are CSV with LF line endings, values printed with
nine significant digits, quantities without a defined value written as the
token "undefined", and a first line of the form `# schema=<name>` naming the
column contract.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import numpy as np

from .qstate import TwoQubitState

UNDEFINED = "undefined"


class StateFileError(Exception):
    """The file is not a readable state description."""


def load_state_file(path: str) -> tuple[TwoQubitState, str]:
    """Read a state file; returns the validated state and its label.

    Structural problems raise StateFileError; a well-formed matrix that is
    not a density matrix raises the usual validation errors.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise StateFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise StateFileError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise StateFileError(f"{path}: expected an object with a 'matrix' key")
    matrix = doc["matrix"]
    if not isinstance(matrix, dict) or "re" not in matrix:
        raise StateFileError(f"{path}: 'matrix' must hold 're' (and optionally 'im')")
    try:
        re_part = np.asarray(matrix["re"], dtype=float)
        im_part = np.asarray(matrix.get("im", np.zeros_like(re_part)), dtype=float)
    except (TypeError, ValueError) as exc:
        raise StateFileError(f"{path}: matrix entries must be numbers: {exc}") from exc
    if re_part.shape != (4, 4) or im_part.shape != (4, 4):
        raise StateFileError(
            f"{path}: matrix must be 4x4, got {re_part.shape} and {im_part.shape}"
        )
    label = doc.get("label", "state")
    if not isinstance(label, str):
        raise StateFileError(f"{path}: 'label' must be a string")
    return TwoQubitState.from_matrix(re_part + 1j * im_part), label


def dump_state_file(path: str, state: TwoQubitState, label: str = "state") -> None:
    """Write a state file readable by load_state_file."""
    doc = {
        "label": label,
        "matrix": {
            "re": state.matrix.real.tolist(),
            "im": state.matrix.imag.tolist(),
        },
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def format_value(value) -> str:
    if value is None:
        return UNDEFINED
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return "%.9g" % value


def write_report(path: str | None, schema: str, fieldnames, rows) -> None:
    """Write a schema-tagged CSV report to `path`, or stdout when None.

    Each row is a sequence matching `fieldnames`; values pass through
    format_value.
    """
    buf = io.StringIO()
    buf.write(f"# schema={schema}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fieldnames)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    text = buf.getvalue()
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def read_report(path: str) -> tuple[str, list[str], list[dict]]:
    """Read back a report: (schema, fieldnames, rows as string dicts)."""
    with open(path, encoding="utf-8", newline="") as fh:
        first = fh.readline().strip()
        if not first.startswith("# schema="):
            raise StateFileError(f"{path}: missing schema line")
        schema = first[len("# schema=") :]
        reader = csv.reader(fh)
        fieldnames = next(reader)
        rows = [dict(zip(fieldnames, row)) for row in reader]
    return schema, fieldnames, rows


def parse_value(text: str) -> float | None:
    """Inverse of format_value for numeric columns."""
    return None if text == UNDEFINED else float(text)
