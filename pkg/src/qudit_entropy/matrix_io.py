"""Line-oriented JSON records for matrices and vectors.

Each nonblank line of an input file is one record:

    {"dim": 2, "entries": [[0.5, 0.0], [0.0, 0.0], [0.0, 0.0], [0.5, 0.0]]}
    {"kind": "vector", "values": [0.25, 0.25, 0.25, 0.25]}

Matrix entries are row-major ``[re, im]`` pairs.  Floats are written with
``repr`` so a write/read cycle is bit-exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Iterator, TextIO

import numpy as np

from .matfun import HERMITIAN_TOL, as_hermitian


@dataclass
class Record:
    kind: str  # "matrix" or "vector"
    data: np.ndarray
    extra: dict[str, Any] = field(default_factory=dict)


def matrix_record(m, **extra) -> dict[str, Any]:
    m = np.asarray(m, dtype=complex)
    entries = [[float(z.real), float(z.imag)] for z in m.ravel()]
    return {"dim": int(m.shape[0]), "entries": entries, **extra}


def vector_record(v, **extra) -> dict[str, Any]:
    return {"kind": "vector", "values": [float(a) for a in np.asarray(v, dtype=float)], **extra}


def parse_record(obj: dict[str, Any], tol: float = HERMITIAN_TOL) -> Record:
    if obj.get("kind") == "vector":
        values = np.asarray(obj["values"], dtype=float)
        extra = {k: v for k, v in obj.items() if k not in ("kind", "values")}
        return Record("vector", values, extra)
    dim = int(obj["dim"])
    entries = obj["entries"]
    if dim < 1 or len(entries) != dim * dim:
        raise ValueError(f"matrix record needs dim^2 = {dim * dim} entries, got {len(entries)}")
    flat = np.array([complex(re, im) for re, im in entries])
    mat = as_hermitian(flat.reshape(dim, dim), tol)
    extra = {k: v for k, v in obj.items() if k not in ("dim", "entries")}
    return Record("matrix", mat, extra)


def read_records(source: str | Path | TextIO, tol: float = HERMITIAN_TOL) -> Iterator[Record]:
    if isinstance(source, (str, Path)):
        with open(source) as fh:
            yield from read_records(fh, tol)
        return
    for lineno, line in enumerate(source, 1):
        if not line.strip():
            continue
        try:
            yield parse_record(json.loads(line), tol)
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise ValueError(f"line {lineno}: malformed record ({exc})") from exc


def write_records(records: Iterable[dict[str, Any]], sink: TextIO) -> None:
    for rec in records:
        sink.write(json.dumps(rec) + "\n")
