"""Reading and writing instance documents.

An instance is a JSON object with exact rational strings everywhere:

.. code-block:: json

    {
      "vertices": {"A": ["0", "0"], "B": ["1", "0"],
                   "C": ["1", "1"], "D": ["0", "1"]},
      "ratios": {"m": "1", "n": "1", "p": "1", "q": "2"},
      "checks": "all"
    }

``ratios`` may be replaced by ``points`` holding ``M N P Q`` coordinate
pairs; exactly one of the two must be present.  ``checks`` is ``"all"``
or a list of claim ids.  Rationals are written ``"p/q"`` or ``"p"``;
decimal literals are rejected outright so no precision is ever lost
silently.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .configuration import (
    Configuration,
    Quadrilateral,
    SideRatios,
    build_from_points,
    build_from_ratios,
)
from .errors import InstanceFormatError
from .kernel import Point
from .verifiers import CLAIM_IDS

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")

VERTEX_KEYS = ("A", "B", "C", "D")
RATIO_KEYS = ("m", "n", "p", "q")
POINT_KEYS = ("M", "N", "P", "Q")


def parse_rational(text: object, where: str) -> Fraction:
    """Parse an exact rational string; decimals and floats are errors."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise InstanceFormatError(
            f"{where}: expected an exact rational string like '2/3', got {text!r}"
        )
    if "/" in text and int(text.split("/")[1]) == 0:
        raise InstanceFormatError(f"{where}: zero denominator")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    return str(value)


def _parse_pair(obj: object, where: str) -> Point:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise InstanceFormatError(f"{where}: expected a coordinate pair")
    return Point(parse_rational(obj[0], where + "[0]"), parse_rational(obj[1], where + "[1]"))


@dataclass(frozen=True)
class InstanceFile:
    """A parsed instance: vertices plus either ratios or side points."""

    vertices: tuple[Point, Point, Point, Point]
    ratios: Optional[SideRatios]
    points: Optional[tuple[Point, Point, Point, Point]]
    checks: tuple[str, ...]  # empty means "all"

    def quadrilateral(self) -> Quadrilateral:
        return Quadrilateral.of(*self.vertices)

    def configuration(self) -> Configuration:
        quad = self.quadrilateral()
        if self.ratios is not None:
            return build_from_ratios(quad, self.ratios)
        assert self.points is not None
        return build_from_points(quad, *self.points)


def parse_instance(text: str, source: str = "<instance>") -> InstanceFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(
            f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise InstanceFormatError(f"{source}: top level must be an object")

    unknown = sorted(set(doc) - {"vertices", "ratios", "points", "checks"})
    if unknown:
        raise InstanceFormatError(f"{source}: unknown keys: {', '.join(unknown)}")

    vertices_obj = doc.get("vertices")
    if not isinstance(vertices_obj, dict) or sorted(vertices_obj) != sorted(VERTEX_KEYS):
        raise InstanceFormatError(f"{source}: 'vertices' must map exactly A, B, C, D")
    vertices = tuple(
        _parse_pair(vertices_obj[k], f"{source}: vertices.{k}") for k in VERTEX_KEYS
    )

    has_ratios = "ratios" in doc
    has_points = "points" in doc
    if has_ratios == has_points:
        raise InstanceFormatError(f"{source}: exactly one of 'ratios' or 'points' is required")

    ratios = None
    points = None
    if has_ratios:
        robj = doc["ratios"]
        if not isinstance(robj, dict) or sorted(robj) != sorted(RATIO_KEYS):
            raise InstanceFormatError(f"{source}: 'ratios' must map exactly m, n, p, q")
        ratios = SideRatios(
            *(parse_rational(robj[k], f"{source}: ratios.{k}") for k in RATIO_KEYS)
        )
    else:
        pobj = doc["points"]
        if not isinstance(pobj, dict) or sorted(pobj) != sorted(POINT_KEYS):
            raise InstanceFormatError(f"{source}: 'points' must map exactly M, N, P, Q")
        points = tuple(
            _parse_pair(pobj[k], f"{source}: points.{k}") for k in POINT_KEYS
        )

    checks_obj = doc.get("checks", "all")
    if checks_obj == "all" or checks_obj == ["all"]:
        checks: tuple[str, ...] = ()
    elif isinstance(checks_obj, list) and all(isinstance(c, str) for c in checks_obj):
        bad = sorted(set(checks_obj) - set(CLAIM_IDS))
        if bad:
            raise InstanceFormatError(f"{source}: unknown claim ids: {', '.join(bad)}")
        checks = tuple(checks_obj)
    else:
        raise InstanceFormatError(f"{source}: 'checks' must be \"all\" or a list of claim ids")

    return InstanceFile(vertices=vertices, ratios=ratios, points=points, checks=checks)


def load_instance(path: str) -> InstanceFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read(), source=path)


def instance_document(inst: InstanceFile) -> dict:
    """The JSON tree for an instance, all numbers as rational strings."""
    doc: dict = {
        "vertices": {
            key: [format_rational(c) for c in vertex.affine()]
            for key, vertex in zip(VERTEX_KEYS, inst.vertices)
        }
    }
    if inst.ratios is not None:
        doc["ratios"] = {
            key: format_rational(value)
            for key, value in zip(RATIO_KEYS, inst.ratios.as_tuple)
        }
    if inst.points is not None:
        doc["points"] = {
            key: [format_rational(c) for c in pt.affine()]
            for key, pt in zip(POINT_KEYS, inst.points)
        }
    doc["checks"] = list(inst.checks) if inst.checks else "all"
    return doc


def serialize_instance(inst: InstanceFile) -> str:
    """Byte-stable rendering; parsing it back yields an equal instance."""
    return json.dumps(instance_document(inst), sort_keys=True, indent=2) + "\n"


def instance_from_parts(quad: Quadrilateral, ratios: SideRatios,
                        checks: tuple[str, ...] = ()) -> InstanceFile:
    """Wrap a generated quadrilateral and ratio tuple for replay."""
    return InstanceFile(vertices=quad.vertices, ratios=ratios, points=None, checks=checks)
