"""Canonical JSON encodings.

Complex numbers are ``[re, im]`` pairs. Floats go through ``repr`` (shortest
round-trip decimal), so ``dump -> load -> dump`` is byte-identical. Field
order for frames is fixed: dim, index_model, vectors, tolerance.
"""
from __future__ import annotations

import json
import math

import numpy as np

from .exceptions import FrameFormatError
from .frames import Frame, IndexKind, IndexModel
from .linalg import DEFAULT_TOL, Tolerance


def complex_to_pair(z):
    return [float(z.real), float(z.imag)]


def vector_to_json(v):
    return [complex_to_pair(z) for z in np.asarray(v).ravel()]


def matrix_to_json(M):
    return [vector_to_json(row) for row in np.asarray(M)]


def _number(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise FrameFormatError(f"{where}: expected a number, got {type(x).__name__}")
    if not math.isfinite(x):
        raise FrameFormatError(f"{where}: non-finite number")
    return float(x)


def pair_to_complex(p, where):
    if not isinstance(p, list) or len(p) != 2:
        raise FrameFormatError(f"{where}: expected a [re, im] pair")
    return complex(_number(p[0], where + "[0]"), _number(p[1], where + "[1]"))


def vector_from_json(obj, where="vector", length=None):
    if not isinstance(obj, list) or not obj:
        raise FrameFormatError(f"{where}: expected a non-empty list of [re, im] pairs")
    if length is not None and len(obj) != length:
        raise FrameFormatError(f"{where}: expected {length} entries, got {len(obj)}")
    return np.array([pair_to_complex(p, f"{where}[{k}]") for k, p in enumerate(obj)])


def matrix_from_json(obj, where="matrix"):
    if not isinstance(obj, list) or not obj:
        raise FrameFormatError(f"{where}: expected a non-empty list of rows")
    rows = [vector_from_json(r, f"{where}[{i}]") for i, r in enumerate(obj)]
    if len({len(r) for r in rows}) != 1:
        raise FrameFormatError(f"{where}: rows have different lengths")
    return np.array(rows)


def frame_to_dict(F, include_tolerance=True):
    """Plain-dict form of a frame, canonical key order."""
    out = {
        "dim": F.dim,
        "index_model": {"kind": F.index_model.kind.value},
        "vectors": matrix_to_json(F.vectors),
    }
    if include_tolerance:
        out["tolerance"] = {"zero_tol": F.tol.zero_tol}
    return out


def frame_from_dict(obj):
    if not isinstance(obj, dict):
        raise FrameFormatError("frame: expected a JSON object")
    if "frame" in obj and "vectors" not in obj:
        obj = obj["frame"]
        if not isinstance(obj, dict):
            raise FrameFormatError("frame: expected a JSON object")
    if "dim" not in obj:
        raise FrameFormatError("dim: missing")
    dim = obj["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise FrameFormatError("dim: expected a positive integer")
    model = obj.get("index_model", {"kind": "cyclic"})
    if not isinstance(model, dict) or model.get("kind") not in ("cyclic", "windowed"):
        raise FrameFormatError('index_model.kind: expected "cyclic" or "windowed"')
    vecs = obj.get("vectors")
    if not isinstance(vecs, list) or not vecs:
        raise FrameFormatError("vectors: expected a non-empty list of vectors")
    V = np.array([vector_from_json(v, f"vectors[{n}]", dim) for n, v in enumerate(vecs)])
    if not np.any(V != 0):
        raise FrameFormatError("vectors: all vectors are zero")
    tol = DEFAULT_TOL
    if "tolerance" in obj:
        t = obj["tolerance"]
        if not isinstance(t, dict) or "zero_tol" not in t:
            raise FrameFormatError("tolerance.zero_tol: missing")
        z = _number(t["zero_tol"], "tolerance.zero_tol")
        if z <= 0:
            raise FrameFormatError("tolerance.zero_tol: must be positive")
        tol = Tolerance(zero_tol=z)
    return Frame(V, IndexModel(IndexKind(model["kind"]), len(V)), tol)


def dumps(obj):
    return json.dumps(obj, separators=(",", ":"), allow_nan=False) + "\n"


def dump_frame(F):
    return dumps(frame_to_dict(F))


def load_frame(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FrameFormatError(f"invalid JSON: {exc}") from exc
    return frame_from_dict(obj)


def read_frame(path):
    with open(path, encoding="utf-8") as fh:
        return load_frame(fh.read())
