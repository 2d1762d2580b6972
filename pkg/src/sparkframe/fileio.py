"""Frame and certificate files.

Frame JSON stores exact entries as lists of t-exponents with power-basis
coefficient strings "p/q", and numeric entries as {"re", "im"} pairs.
Floats are written with full repr precision, so both kinds round-trip
bit-exactly.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any

import numpy as np

from .exactalg import Cyclotomic, CycPolynomial
from .framecore import DEFAULT_T, FrameMatrix

__all__ = [
    "frame_to_json",
    "frame_from_json",
    "frame_to_csv",
    "frame_from_csv",
    "write_frame",
    "read_frame",
    "FrameFormatError",
]


class FrameFormatError(ValueError):
    pass


def _rat(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _entry_to_json(x: CycPolynomial) -> dict:
    return {
        "terms": [
            {"t_exp": e, "coeffs": [_rat(c) for c in x.terms[e].coeffs]}
            for e in sorted(x.terms)
        ]
    }


def _entry_from_json(obj: dict, order: int) -> CycPolynomial:
    terms = {}
    for term in obj["terms"]:
        coeffs = [Fraction(c) for c in term["coeffs"]]
        terms[int(term["t_exp"])] = Cyclotomic(order, coeffs)
    return CycPolynomial(order, terms)


def frame_to_dict(frame: FrameMatrix) -> dict:
    out: dict[str, Any] = {
        "dim": frame.dim,
        "count": frame.count,
        "mode": frame.mode,
        "ambient_order": frame.order,
        "t_value": {"re": frame.t_value.real, "im": frame.t_value.imag},
        "provenance": frame.provenance,
    }
    if frame.mode == "exact":
        out["columns"] = [[_entry_to_json(x) for x in col] for col in frame.columns]
    else:
        arr = frame.array
        out["columns"] = [
            [{"re": float(arr[j, k].real), "im": float(arr[j, k].imag)} for j in range(frame.dim)]
            for k in range(frame.count)
        ]
    return out


def frame_from_dict(obj: dict) -> FrameMatrix:
    try:
        dim, count, mode = int(obj["dim"]), int(obj["count"]), obj["mode"]
        order = int(obj.get("ambient_order", 1))
        tv = obj.get("t_value")
        t_value = complex(tv["re"], tv["im"]) if tv else DEFAULT_T
        prov = dict(obj.get("provenance") or {})
        cols = obj["columns"]
        if len(cols) != count:
            raise FrameFormatError(f"expected {count} columns, found {len(cols)}")
        if mode == "exact":
            columns = tuple(tuple(_entry_from_json(x, order) for x in col) for col in cols)
            return FrameMatrix(dim, count, "exact", order, columns=columns,
                               t_value=t_value, provenance=prov)
        if mode in ("numeric", "float"):
            arr = np.array([[complex(x["re"], x["im"]) for x in col] for col in cols],
                           dtype=complex).T.reshape(dim, count)
            return FrameMatrix(dim, count, "numeric", order, array=arr,
                               t_value=t_value, provenance=prov)
        raise FrameFormatError(f"unknown frame mode {mode!r}")
    except FrameFormatError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise FrameFormatError(f"malformed frame: {exc}") from exc


def frame_to_json(frame: FrameMatrix) -> str:
    return json.dumps(frame_to_dict(frame), indent=1, sort_keys=True)


def frame_from_json(text: str) -> FrameMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FrameFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise FrameFormatError("frame JSON must be an object")
    return frame_from_dict(obj)


def frame_to_csv(frame: FrameMatrix) -> str:
    """Rows ``col,row,re,im``; exact frames are specialized at their t value."""
    arr = frame.numeric_array()
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["col", "row", "re", "im"])
    for k in range(frame.count):
        for j in range(frame.dim):
            w.writerow([k, j, repr(float(arr[j, k].real)), repr(float(arr[j, k].imag))])
    return buf.getvalue()


def frame_from_csv(text: str) -> FrameMatrix:
    try:
        rows = list(csv.DictReader(io.StringIO(text)))
        if not rows:
            raise FrameFormatError("empty CSV frame")
        cells = {(int(r["col"]), int(r["row"])): complex(float(r["re"]), float(r["im"])) for r in rows}
    except (KeyError, TypeError, ValueError) as exc:
        raise FrameFormatError(f"malformed CSV frame: {exc}") from exc
    count = 1 + max(k for k, _ in cells)
    dim = 1 + max(j for _, j in cells)
    if len(cells) != dim * count:
        raise FrameFormatError("CSV frame is missing entries")
    arr = np.empty((dim, count), dtype=complex)
    for (k, j), v in cells.items():
        arr[j, k] = v
    return FrameMatrix.from_array(arr)


def write_frame(frame: FrameMatrix, path: str, fmt: str = "json") -> None:
    text = frame_to_csv(frame) if fmt == "csv" else frame_to_json(frame)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def read_frame(path: str) -> FrameMatrix:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".csv") or text.startswith("col,row"):
        return frame_from_csv(text)
    return frame_from_json(text)
