"""JSON input documents and the bundled example corpus.

A document holds exactly one of::

    {"polytope": {"normals": [[..]], "labels": [..], "lambdas": ["p/q", ..]}}
    {"fan": {"rays": [[..]], "labels": [..], "max_cones": [[..]], "lambdas": [..]}}

Cone indices are 1-based and rationals are strings (integers are accepted too).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional

from .fan import StackyFan
from .polytope import LabeledPolytope

BUNDLED = ("cp112", "p1xp1", "hirzebruch2")


class DocumentError(ValueError):
    """Malformed or schema-violating input."""


def parse_rational(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise DocumentError(f"expected an integer or a 'p/q' string, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as e:
        raise DocumentError(f"bad rational {x!r}") from e


def _int_matrix(rows, name):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise DocumentError(f"{name} must be a list of integer lists")
    for r in rows:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in r):
            raise DocumentError(f"{name} must contain integers only")
    return rows


def _int_list(xs, name):
    return _int_matrix([xs], name)[0]


@dataclass
class Document:
    kind: str  # "polytope" or "fan"
    fan: StackyFan
    lambdas: Optional[tuple]
    polytope: Optional[LabeledPolytope] = None


def load_document(data) -> Document:
    """Schema-check a decoded JSON document.

    The polytope's normal fan is built lazily by :func:`realize`, since
    vertex enumeration can fail for domain reasons.
    """
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    keys = {"polytope", "fan"} & set(data)
    if len(keys) != 1:
        raise DocumentError("document must contain exactly one of 'polytope' or 'fan'")
    (kind,) = keys
    body = data[kind]
    if not isinstance(body, dict):
        raise DocumentError(f"'{kind}' must be an object")
    if kind == "polytope":
        for k in ("normals", "labels", "lambdas"):
            if k not in body:
                raise DocumentError(f"polytope is missing '{k}'")
        normals = _int_matrix(body["normals"], "normals")
        labels = _int_list(body["labels"], "labels")
        lambdas = tuple(parse_rational(x) for x in body["lambdas"])
        if not (len(normals) == len(labels) == len(lambdas)) or not normals:
            raise DocumentError("normals, labels and lambdas must have equal nonzero length")
        if len({len(y) for y in normals}) != 1:
            raise DocumentError("normals have different lengths")
        return Document(kind, None, lambdas, _RawPolytope(normals, labels, lambdas))
    for k in ("rays", "max_cones"):
        if k not in body:
            raise DocumentError(f"fan is missing '{k}'")
    rays = _int_matrix(body["rays"], "rays")
    if not rays or len({len(y) for y in rays}) != 1:
        raise DocumentError("rays must be a nonempty list of equal-length vectors")
    labels = _int_list(body.get("labels", [1] * len(rays)), "labels")
    if len(labels) != len(rays):
        raise DocumentError("labels and rays differ in length")
    cones = _int_matrix(body["max_cones"], "max_cones")
    for c in cones:
        if any(i < 1 or i > len(rays) for i in c):
            raise DocumentError(f"cone {c} has an index outside 1..{len(rays)}")
    lambdas = None
    if body.get("lambdas") is not None:
        lambdas = tuple(parse_rational(x) for x in body["lambdas"])
        if len(lambdas) != len(rays):
            raise DocumentError("lambdas and rays differ in length")
    fan = StackyFan(rays, labels, [[i - 1 for i in c] for c in cones])
    return Document(kind, fan, lambdas)


class _RawPolytope:
    """Polytope data kept unvalidated until :func:`realize`."""

    def __init__(self, normals, labels, lambdas):
        self.normals, self.labels, self.lambdas = normals, labels, lambdas

    def build(self) -> LabeledPolytope:
        return LabeledPolytope(self.normals, self.labels, self.lambdas)


def realize(doc: Document) -> Document:
    """Build the normal fan of a polytope document; may raise PolytopeError."""
    if doc.kind == "polytope" and doc.fan is None:
        poly = doc.polytope.build()
        fan, lambdas = poly.to_stacky_fan()
        return Document(doc.kind, fan, lambdas, poly)
    return doc


def read_document(text: str) -> Document:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"malformed JSON: {e}") from e
    return load_document(data)


def bundled(name: str) -> dict:
    """Decoded JSON of a bundled corpus file (``cp112``, ``p1xp1``, ``hirzebruch2``)."""
    name = name.removesuffix(".json")
    if name not in BUNDLED:
        raise KeyError(name)
    return json.loads(resources.files("orbiqh.data").joinpath(f"{name}.json").read_text("utf-8"))


def cp_a_b(a: int, b: int, lambdas=(1, 1)) -> dict:
    """Weighted projective line CP(a, b) as a labeled segment."""
    return {
        "polytope": {
            "normals": [[-1], [1]],
            "labels": [a, b],
            "lambdas": [str(Fraction(x)) for x in lambdas],
        }
    }


def corpus() -> dict:
    """Named example documents used by the tests and demos."""
    out = {name: bundled(name) for name in BUNDLED}
    for a, b in ((1, 2), (2, 3), (3, 5)):
        out[f"cp{a}{b}"] = cp_a_b(a, b)
    return out
