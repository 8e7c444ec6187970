"""JSON (de)serialisation of matrices and group elements.

Matrix format: ``{"rows": r, "cols": c, "data": [[re, im], ...]}`` row-major.
Real matrices may use bare numbers in place of ``[re, im]`` pairs.
Block pairs serialise as ``{"n": n, "P": mat, "Q": mat}``.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import ShapeError
from .matcore import as_matrix

__all__ = ["matrix_to_obj", "matrix_from_obj", "load_matrix", "dump_matrix"]


def matrix_to_obj(m: np.ndarray) -> dict:
    m = as_matrix(m)
    if np.all(m.imag == 0):
        data = [float(x) for x in m.real.ravel()]
    else:
        data = [[float(x.real), float(x.imag)] for x in m.ravel()]
    return {"rows": int(m.shape[0]), "cols": int(m.shape[1]), "data": data}


def matrix_from_obj(obj: dict) -> np.ndarray:
    try:
        rows, cols, data = int(obj["rows"]), int(obj["cols"]), obj["data"]
    except (KeyError, TypeError) as exc:
        raise ShapeError(f"bad matrix object: {exc}")
    if len(data) != rows * cols:
        raise ShapeError(f"expected {rows * cols} entries, got {len(data)}")
    flat = []
    for entry in data:
        if isinstance(entry, (int, float)):
            flat.append(complex(entry))
        else:
            re, im = entry
            flat.append(complex(re, im))
    return np.array(flat, dtype=complex).reshape(rows, cols)


def load_matrix(path: str) -> np.ndarray:
    with open(path) as fh:
        return matrix_from_obj(json.load(fh))


def dump_matrix(m: np.ndarray, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(matrix_to_obj(m), fh)
