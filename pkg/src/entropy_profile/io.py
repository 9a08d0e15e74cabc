"""JSON state/transform files, profile CSV, and 17-digit number output."""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path

import numpy as np

from .contractions import BlockStructure, Partition, SequenceMap
from .errors import StateError
from .profile import EntropyProfile
from .states import DensityOperator, DiscreteDistribution, make_density, make_distribution


def fmt(x: float) -> str:
    """17 significant digits; round-trips any double."""
    return format(float(x), ".17g")


def dumps(obj) -> str:
    """JSON text with every float written at 17 significant digits.

    Non-finite floats become ``null``.
    """
    if obj is None or isinstance(obj, (bool, np.bool_)):
        return json.dumps(None if obj is None else bool(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt(obj) if math.isfinite(obj) else "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateError(f"invalid JSON: {exc}") from exc


def state_from_dict(doc: dict, tol: float = 1e-9):
    kind = doc.get("kind") if isinstance(doc, dict) else None
    try:
        if kind == "distribution":
            return make_distribution(doc["weights"], tol=tol)
        if kind == "density":
            re = np.asarray(doc["re"], dtype=float)
            im = np.asarray(doc["im"], dtype=float) if "im" in doc else np.zeros_like(re)
            if re.ndim != 2 or re.shape[0] != re.shape[1] or im.shape != re.shape:
                raise StateError("density re/im must be square and of equal size")
            return make_density(re, im, tol=tol)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, StateError):
            raise
        raise StateError(f"malformed state: {exc}") from exc
    raise StateError(f"unknown state kind {kind!r}")


def state_to_dict(state) -> dict:
    if isinstance(state, DiscreteDistribution):
        return {"kind": "distribution", "weights": state.entries.tolist()}
    if isinstance(state, DensityOperator):
        return {"kind": "density", "re": state.re.tolist(), "im": state.im.tolist()}
    raise TypeError(f"not a state: {type(state).__name__}")


def load_state(path, tol: float = 1e-9):
    return state_from_dict(parse_json(Path(path).read_text()), tol=tol)


def transform_from_dict(doc: dict):
    kind = doc.get("kind") if isinstance(doc, dict) else None
    try:
        if kind == "matrix":
            return SequenceMap(np.asarray(doc["rows"], dtype=float))
        if kind == "partition":
            return Partition(doc["blocks"])
        if kind == "blockstructure":
            return BlockStructure(doc["sizes"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, StateError):
            raise
        raise StateError(f"malformed transform: {exc}") from exc
    raise StateError(f"unknown transform kind {kind!r}")


def transform_to_dict(t) -> dict:
    if isinstance(t, SequenceMap):
        return {"kind": "matrix", "rows": t.matrix.tolist()}
    if isinstance(t, Partition):
        return {"kind": "partition", "blocks": [list(b) for b in t.blocks]}
    if isinstance(t, BlockStructure):
        return {"kind": "blockstructure", "sizes": list(t.sizes)}
    raise TypeError(f"no file format for {type(t).__name__}")


def load_transform(path):
    return transform_from_dict(parse_json(Path(path).read_text()))


def profile_to_csv(p: EntropyProfile) -> str:
    buf = io.StringIO()
    buf.write("r1,rinf\n")
    for r1, rinf in p.breakpoints:
        buf.write(f"{fmt(r1)},{fmt(rinf)}\n")
    return buf.getvalue()


def read_profile_csv(text: str) -> list[tuple[float, float]]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or [c.strip() for c in rows[0]] != ["r1", "rinf"]:
        raise StateError("profile CSV must start with header r1,rinf")
    return [(float(a), float(b)) for a, b in rows[1:]]
