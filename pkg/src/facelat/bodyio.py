"""Exact JSON body files shared by the polytope and planar modules.

One format, discriminated by "type".  Coordinates are rational strings
("3/5", "-2") or integers; floating-point literals are rejected so that a
file round-trips exactly.

    {"type": "polytope", "ambient_dim": 2, "vertices": [["-1","0"], ...]}

    {"type": "planar",
     "features": [{"kind": "segment", "from": [..], "to": [..], "closed": true},
                  {"kind": "arc", "center": [..], "radius_sq": "5/4",
                   "from": [..], "to": [..], "closed": true}, ...],
     "vertex_closed": [true, ...]}

`vertex_closed[j]` flags the junction point where feature j starts (the
shared endpoint of features j-1 and j).
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .exactgeom import Vec
from .planar import Arc, PlanarBody, Segment
from .polytope import Polytope

Body = Polytope | PlanarBody


def _reject_float(s: str):
    raise ParseError(f"floating-point literal {s!r}: use rational strings like '3/5'")


def _fraction(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"{where}: bad rational {value!r}") from e
    raise ParseError(f"{where}: expected a rational string or integer")


def _point(value, where: str, dim: int | None = None) -> Vec:
    if not isinstance(value, list) or (dim is not None and len(value) != dim):
        raise ParseError(f"{where}: expected a coordinate list"
                         + (f" of length {dim}" if dim else ""))
    return tuple(_fraction(c, where) for c in value)


def loads(text: str) -> Body:
    try:
        doc = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise ParseError("body document must be a JSON object")
    kind = doc.get("type")
    if kind == "polytope":
        return _load_polytope(doc)
    if kind == "planar":
        return _load_planar(doc)
    raise ParseError(f"unknown body type {kind!r}")


def _load_polytope(doc: dict) -> Polytope:
    dim = doc.get("ambient_dim")
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise ParseError("polytope needs an integer ambient_dim")
    verts = doc.get("vertices")
    if not isinstance(verts, list) or not verts:
        raise ParseError("polytope needs a nonempty vertex list")
    points = tuple(_point(v, f"vertex {i}", dim) for i, v in enumerate(verts))
    try:
        return Polytope(points)
    except ValueError as e:
        raise ParseError(str(e)) from e


def _load_planar(doc: dict) -> PlanarBody:
    feats_doc = doc.get("features")
    if not isinstance(feats_doc, list) or len(feats_doc) < 2:
        raise ParseError("planar body needs a feature list")
    features = []
    closed = []
    for i, fd in enumerate(feats_doc):
        if not isinstance(fd, dict):
            raise ParseError(f"feature {i}: expected an object")
        where = f"feature {i}"
        k = fd.get("kind")
        if k == "segment":
            features.append(Segment(_point(fd.get("from"), where, 2),
                                    _point(fd.get("to"), where, 2)))
        elif k == "arc":
            features.append(Arc(_point(fd.get("center"), where, 2),
                                _fraction(fd.get("radius_sq"), where),
                                _point(fd.get("from"), where, 2),
                                _point(fd.get("to"), where, 2)))
        else:
            raise ParseError(f"{where}: unknown kind {k!r}")
        flag = fd.get("closed", True)
        if not isinstance(flag, bool):
            raise ParseError(f"{where}: 'closed' must be a boolean")
        closed.append(flag)
    vc = doc.get("vertex_closed", [True] * len(features))
    if (not isinstance(vc, list) or len(vc) != len(features)
            or not all(isinstance(b, bool) for b in vc)):
        raise ParseError("vertex_closed must list one boolean per junction")
    try:
        return PlanarBody(tuple(features), tuple(closed), tuple(vc))
    except ValueError as e:
        raise ParseError(str(e)) from e


def load_path(path: str | Path) -> Body:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    return loads(text)


def _coords(v: Vec) -> list[str]:
    return [str(c) for c in v]


def dumps(body: Body, notes: str | None = None) -> str:
    if isinstance(body, Polytope):
        doc = {"type": "polytope", "ambient_dim": body.ambient_dim,
               "vertices": [_coords(v) for v in body.vertices]}
    else:
        feats = []
        for f, fc in zip(body.features, body.feature_closed):
            if isinstance(f, Segment):
                feats.append({"kind": "segment", "from": _coords(f.start),
                              "to": _coords(f.end), "closed": fc})
            else:
                feats.append({"kind": "arc", "center": _coords(f.center),
                              "radius_sq": str(f.radius_sq),
                              "from": _coords(f.start), "to": _coords(f.end),
                              "closed": fc})
        doc = {"type": "planar", "features": feats,
               "vertex_closed": list(body.vertex_closed)}
    if notes:
        doc["notes"] = notes
    return json.dumps(doc, indent=2) + "\n"


def fixtures_dir() -> Path:
    env = os.environ.get("FACELAT_FIXTURES")
    if env:
        return Path(env)
    return Path(__file__).parent / "fixtures"


def list_fixtures() -> list[str]:
    return sorted(p.stem for p in fixtures_dir().glob("*.json"))


def load_fixture(name: str) -> Body:
    path = fixtures_dir() / (name if name.endswith(".json") else name + ".json")
    if not path.exists():
        raise ParseError(f"unknown fixture {name!r} (looked in {fixtures_dir()})")
    return load_path(path)


def resolve_body(ref: str) -> tuple[str, Body]:
    """Load a body from a file path or a fixture name; returns (name, body)."""
    p = Path(ref)
    if p.exists():
        return p.stem, load_path(p)
    return ref.removesuffix(".json"), load_fixture(ref)
