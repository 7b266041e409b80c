"""File formats: matrices as CSV/JSON, databases as JSON lines.

Real matrices are CSV with one row per matrix row; complex matrices are
JSON objects ``{"re": [[...]], "im": [[...]]}``.  A database file starts
with a header line recording the group, shape, and feature map, followed
by one record per line.  CSV decimals carry 17 significant digits and
JSON floats use shortest round-trip notation, so writing then reading
reproduces every value exactly.  Files are written atomically (temp file
plus rename).
"""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

import numpy as np

from .errors import OrbitDistError
from .metrics import GroupAction
from .search import ShapeDatabase


class ParseError(OrbitDistError):
    """A file could not be parsed; the message carries the position."""


def fmt17(x: float) -> str:
    return f"{float(x):.17g}"


def atomic_write_text(path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _parse_csv_matrix(text: str, path) -> np.ndarray:
    rows = []
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError(f"{path}: empty matrix file")
    width = None
    for i, line in enumerate(lines):
        fields = line.split(",")
        if width is None:
            width = len(fields)
        elif len(fields) != width:
            raise ParseError(
                f"{path}: row {i + 1} has {len(fields)} columns, expected {width}"
            )
        row = []
        for j, f in enumerate(fields):
            try:
                row.append(float(f))
            except ValueError:
                raise ParseError(
                    f"{path}: row {i + 1}, column {j + 1}: cannot parse {f.strip()!r}"
                ) from None
        rows.append(row)
    return np.array(rows)


def _grid_from_json(value, path, name: str) -> np.ndarray:
    if not isinstance(value, list) or not value or not all(isinstance(r, list) for r in value):
        raise ParseError(f"{path}: {name} must be a nonempty list of rows")
    width = len(value[0])
    for i, row in enumerate(value):
        if len(row) != width:
            raise ParseError(
                f"{path}: {name} row {i + 1} has {len(row)} columns, expected {width}"
            )
        for j, x in enumerate(row):
            if not isinstance(x, (int, float)) or isinstance(x, bool):
                raise ParseError(f"{path}: {name} row {i + 1}, column {j + 1}: not a number")
    return np.array(value, dtype=float)


def matrix_from_json(value, path="<json>") -> np.ndarray:
    """Matrix from a decoded JSON value: nested array (real) or re/im object."""
    if isinstance(value, dict):
        if set(value) != {"re", "im"}:
            raise ParseError(f"{path}: complex matrix object must have keys 're' and 'im'")
        re = _grid_from_json(value["re"], path, "re")
        im = _grid_from_json(value["im"], path, "im")
        if re.shape != im.shape:
            raise ParseError(f"{path}: 're' shape {re.shape} != 'im' shape {im.shape}")
        return re + 1j * im
    return _grid_from_json(value, path, "matrix")


def matrix_to_json(m: np.ndarray):
    a = np.asarray(m)
    if np.iscomplexobj(a):
        return {"re": a.real.tolist(), "im": a.imag.tolist()}
    return a.tolist()


def read_matrix(path) -> np.ndarray:
    """Read a matrix file, sniffing CSV (real) versus JSON (complex)."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            value = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON: {exc}") from None
        return matrix_from_json(value, path)
    return _parse_csv_matrix(text, path)


def write_matrix(path, m) -> None:
    a = np.asarray(m)
    if np.iscomplexobj(a):
        atomic_write_text(path, json.dumps(matrix_to_json(a)) + "\n")
    else:
        lines = [",".join(fmt17(x) for x in row) for row in a]
        atomic_write_text(path, "\n".join(lines) + "\n")


def save_database(path, db: ShapeDatabase) -> None:
    header = {
        "group": db.group.value,
        "n": int(db.n),
        "l": int(db.l),
        "feature_map": db.feature_map,
    }
    lines = [json.dumps(header, sort_keys=True)]
    for rid, m in zip(db.ids, db.matrices):
        lines.append(json.dumps({"id": rid, "matrix": matrix_to_json(m)}, sort_keys=True))
    atomic_write_text(path, "\n".join(lines) + "\n")


def load_database(path) -> ShapeDatabase:
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines:
        raise ParseError(f"{path}: empty database file")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line 1: invalid JSON: {exc}") from None
    for key in ("group", "n", "l", "feature_map"):
        if key not in header:
            raise ParseError(f"{path}: header is missing {key!r}")
    group = GroupAction(header["group"])
    records = []
    for i, line in enumerate(lines[1:], start=2):
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: line {i}: invalid JSON: {exc}") from None
        if "id" not in obj or "matrix" not in obj:
            raise ParseError(f"{path}: line {i}: record needs 'id' and 'matrix'")
        records.append((str(obj["id"]), matrix_from_json(obj["matrix"], f"{path}:line {i}")))
    db = ShapeDatabase(group, records, header["feature_map"])
    if records and (db.n != int(header["n"]) or db.l != int(header["l"])):
        raise ParseError(
            f"{path}: header shape ({header['n']}, {header['l']}) does not match records"
        )
    return db
