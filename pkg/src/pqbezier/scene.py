"""JSON scene documents holding one curve or one surface.

Curve::

    {"kind": "curve", "p": 0.9, "q": 0.6, "points": [[0, 0], [1, 2], [2, 0]]}

Surface (rows of the control net, u along rows)::

    {"kind": "surface", "p": 0.9, "q": 0.6, "p2": 1.0, "q2": 0.5,
     "points": [[[0, 0, 0], [0, 1, 0]], [[1, 0, 0], [1, 1, 1]]]}

An optional ``"style"`` object may carry ``stroke_width`` and ``samples``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .curve import ControlPolygon
from .errors import DomainError
from .pq_arith import PQParams
from .surface import ControlNet

__all__ = [
    "DocumentError",
    "SceneDocument",
    "parse_document",
    "load_document",
    "dumps_document",
    "save_document",
]

STYLE_KEYS = {"stroke_width": float, "samples": int}


class DocumentError(ValueError):
    """A scene document is malformed; the message names the offending field."""


@dataclass(frozen=True)
class SceneDocument:
    kind: str
    params: tuple  # one PQParams for curves, (u, v) pair for surfaces
    points: tuple
    style: dict = field(default_factory=dict)

    @classmethod
    def from_polygon(cls, poly: ControlPolygon, style=None) -> SceneDocument:
        return cls("curve", (poly.params,), _to_tuples(poly.points), dict(style or {}))

    @classmethod
    def from_net(cls, net: ControlNet, style=None) -> SceneDocument:
        return cls("surface", (net.params_u, net.params_v), _to_tuples(net.grid), dict(style or {}))

    def polygon(self) -> ControlPolygon:
        if self.kind != "curve":
            raise DocumentError(f"kind: expected 'curve', got {self.kind!r}")
        return ControlPolygon(self.points, self.params[0])

    def net(self) -> ControlNet:
        if self.kind != "surface":
            raise DocumentError(f"kind: expected 'surface', got {self.kind!r}")
        return ControlNet(self.points, self.params[0], self.params[1])

    def to_json_obj(self) -> dict:
        obj = {"kind": self.kind, "p": self.params[0].p, "q": self.params[0].q}
        if self.kind == "surface":
            obj["p2"], obj["q2"] = self.params[1].p, self.params[1].q
        obj["points"] = _to_lists(self.points)
        if self.style:
            obj["style"] = dict(self.style)
        return obj


def _to_tuples(arr) -> tuple:
    if hasattr(arr, "tolist"):
        arr = arr.tolist()
    if isinstance(arr, (list, tuple)):
        return tuple(_to_tuples(a) for a in arr)
    return float(arr)


def _to_lists(tup):
    if isinstance(tup, tuple):
        return [_to_lists(t) for t in tup]
    return tup


def _number(obj: dict, key: str) -> float:
    if key not in obj:
        raise DocumentError(f"{key}: missing")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError(f"{key}: expected a number, got {value!r}")
    return float(value)


def _params(obj: dict, pkey: str, qkey: str) -> PQParams:
    p, q = _number(obj, pkey), _number(obj, qkey)
    try:
        return PQParams(p, q)
    except DomainError as exc:
        raise DocumentError(f"{pkey}/{qkey}: {exc}") from None


def _point(value, where: str, dims: tuple) -> tuple:
    if not isinstance(value, list) or len(value) not in dims:
        raise DocumentError(f"{where}: expected a point with {' or '.join(map(str, dims))} coordinates")
    coords = []
    for c in value:
        if isinstance(c, bool) or not isinstance(c, (int, float)) or not math.isfinite(c):
            raise DocumentError(f"{where}: coordinates must be finite numbers, got {c!r}")
        coords.append(float(c))
    return tuple(coords)


def _style(obj: dict) -> dict:
    style = obj.get("style", {})
    if not isinstance(style, dict):
        raise DocumentError("style: expected an object")
    out = {}
    for key, value in style.items():
        if key not in STYLE_KEYS:
            raise DocumentError(f"style.{key}: unknown style key")
        kind = STYLE_KEYS[key]
        if isinstance(value, bool) or not isinstance(value, (int, float)) or value <= 0:
            raise DocumentError(f"style.{key}: expected a positive number")
        if kind is int and int(value) != value:
            raise DocumentError(f"style.{key}: expected an integer")
        out[key] = kind(value)
    return out


def parse_document(obj) -> SceneDocument:
    """Validate a decoded JSON object and build a SceneDocument."""
    if not isinstance(obj, dict):
        raise DocumentError("document: expected a JSON object")
    kind = obj.get("kind")
    if kind not in ("curve", "surface"):
        raise DocumentError(f"kind: expected 'curve' or 'surface', got {kind!r}")
    points = obj.get("points")
    if not isinstance(points, list) or not points:
        raise DocumentError("points: expected a non-empty list")
    style = _style(obj)
    if kind == "curve":
        params = (_params(obj, "p", "q"),)
        pts = tuple(_point(pt, f"points[{i}]", (2, 3)) for i, pt in enumerate(points))
        if len({len(pt) for pt in pts}) != 1:
            raise DocumentError("points: all points must have the same dimension")
    else:
        params = (_params(obj, "p", "q"), _params(obj, "p2", "q2"))
        rows = []
        for i, row in enumerate(points):
            if not isinstance(row, list) or not row:
                raise DocumentError(f"points[{i}]: expected a non-empty row of points")
            rows.append(tuple(_point(pt, f"points[{i}][{j}]", (3,)) for j, pt in enumerate(row)))
        if len({len(r) for r in rows}) != 1:
            raise DocumentError("points: rows of the control net must have equal length")
        pts = tuple(rows)
    return SceneDocument(kind, params, pts, style)


def load_document(path) -> SceneDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"document: cannot read {path}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"document: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return parse_document(obj)


def dumps_document(doc: SceneDocument) -> str:
    return json.dumps(doc.to_json_obj(), indent=2) + "\n"


def save_document(doc: SceneDocument, path) -> None:
    Path(path).write_text(dumps_document(doc), encoding="utf-8")
