"""Exact plane geometry over the rationals, in homogeneous coordinates.

Conventions
-----------
* A :class:`Point` stores a canonical integer triple ``(x, y, w)``
  proportional to the rational triple it was built from.  ``w != 0``
  marks a finite point (affine coordinates ``x/w, y/w``); ``w == 0``
  marks a direction, i.e. a point at infinity.  Meets of parallel lines
  are therefore total: they return ideal points instead of failing.
* A :class:`Line` is the locus ``a*x + b*y + c*w = 0`` with
  ``(a, b) != (0, 0)``; the line at infinity is deliberately not
  representable.
* Equality of points and of lines is projective (cross-multiplication);
  canonical storage makes it agree with hashing.
* ``directed_ratio(a, p, b)`` returns ``lam / (1 - lam)`` where
  ``p = a + lam*(b - a)``: positive exactly when ``p`` lies strictly
  between ``a`` and ``b``, negative outside the segment, ``0`` at ``a``,
  and undefined at ``b``.  ``point_dividing`` is its exact inverse.

Everything here is an immutable value and every function is pure.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from . import _backend as _k
from .errors import (
    CoincidentEndpoints,
    CoincidentLines,
    CoincidentPoints,
    IdealLine,
    InfiniteRatio,
    NotCollinear,
    NotFinite,
    RatioMinusOne,
)

Rat = Fraction
RatLike = Union[int, str, Fraction]

Shape = str
CONVEX: Shape = "convex"
CONCAVE: Shape = "concave"
CROSSED: Shape = "crossed"
DEGENERATE: Shape = "degenerate"
SHAPES: tuple[Shape, ...] = (CONVEX, CONCAVE, CROSSED, DEGENERATE)


def as_rat(value: RatLike) -> Fraction:
    """Coerce to an exact rational; floats are rejected, never rounded."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _integer_triple(x: Fraction, y: Fraction, w: Fraction) -> tuple[int, int, int]:
    scale = x.denominator * y.denominator * w.denominator
    return (
        x.numerator * (scale // x.denominator),
        y.numerator * (scale // y.denominator),
        w.numerator * (scale // w.denominator),
    )


class Point:
    """A projective point; finite when its weight component is nonzero."""

    __slots__ = ("_t",)

    def __init__(self, x: RatLike, y: RatLike, w: RatLike = 1):
        t = _integer_triple(as_rat(x), as_rat(y), as_rat(w))
        if t == (0, 0, 0):
            raise ValueError("(0, 0, 0) is not a point")
        self._t = _k.reduce3(*t)

    @classmethod
    def _wrap(cls, triple: tuple[int, int, int]) -> "Point":
        obj = object.__new__(cls)
        obj._t = triple
        return obj

    @property
    def x(self) -> int:
        return self._t[0]

    @property
    def y(self) -> int:
        return self._t[1]

    @property
    def w(self) -> int:
        return self._t[2]

    def triple(self) -> tuple[int, int, int]:
        """The canonical integer representative of this point."""
        return self._t

    @property
    def is_finite(self) -> bool:
        return self._t[2] != 0

    @property
    def is_ideal(self) -> bool:
        return self._t[2] == 0

    def affine(self) -> tuple[Fraction, Fraction]:
        x, y, w = self._t
        if w == 0:
            raise NotFinite("ideal point has no affine coordinates")
        return Fraction(x, w), Fraction(y, w)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        return hash((Point, self._t))

    def __repr__(self) -> str:
        x, y, w = self._t
        if w == 1:
            return f"Point({x}, {y})"
        if w == 0:
            return f"Point({x}, {y}, 0)"
        return f"Point({Fraction(x, w)}, {Fraction(y, w)})"


class Line:
    """The locus ``a*x + b*y + c*w = 0`` with ``(a, b) != (0, 0)``."""

    __slots__ = ("_t",)

    def __init__(self, a: RatLike, b: RatLike, c: RatLike):
        t = _integer_triple(as_rat(a), as_rat(b), as_rat(c))
        if t[0] == 0 and t[1] == 0:
            raise IdealLine("the line at infinity is not representable")
        self._t = _k.reduce3(*t)

    @classmethod
    def _wrap(cls, triple: tuple[int, int, int]) -> "Line":
        obj = object.__new__(cls)
        obj._t = triple
        return obj

    @property
    def a(self) -> int:
        return self._t[0]

    @property
    def b(self) -> int:
        return self._t[1]

    @property
    def c(self) -> int:
        return self._t[2]

    def triple(self) -> tuple[int, int, int]:
        return self._t

    def contains(self, p: Point) -> bool:
        return _k.dot3(self._t, p._t) == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Line):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        return hash((Line, self._t))

    def __repr__(self) -> str:
        a, b, c = self._t
        return f"Line({a}, {b}, {c})"


def line_through(p: Point, q: Point) -> Line:
    """The unique line incident to two distinct points."""
    c = _k.cross3(p._t, q._t)
    if c == (0, 0, 0):
        raise CoincidentPoints(f"no unique line through {p!r} twice")
    if c[0] == 0 and c[1] == 0:
        raise IdealLine("both points are ideal; their join is the line at infinity")
    return Line._wrap(_k.reduce3(*c))


def meet(l1: Line, l2: Line) -> Point:
    """The common point of two distinct lines; ideal when they are parallel."""
    c = _k.cross3(l1._t, l2._t)
    if c == (0, 0, 0):
        raise CoincidentLines(f"{l1!r} and {l2!r} are the same line")
    return Point._wrap(_k.reduce3(*c))


def collinear(p: Point, q: Point, r: Point) -> bool:
    """Exact incidence test: the 3x3 coordinate determinant vanishes."""
    return _k.det3(p._t, q._t, r._t) == 0


def concurrent(lines: Sequence[Line]) -> Point | None:
    """The common point of three or more pairwise-distinct lines, if any."""
    ls = list(lines)
    if len(ls) < 3:
        raise ValueError("concurrence needs at least three lines")
    for i in range(len(ls)):
        for j in range(i + 1, len(ls)):
            if ls[i] == ls[j]:
                raise CoincidentLines("concurrent() requires pairwise-distinct lines")
    pt = meet(ls[0], ls[1])
    t = pt._t
    for line in ls[2:]:
        if _k.dot3(line._t, t) != 0:
            return None
    return pt


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the signed area of the triangle ``a b c``; zero iff collinear."""
    for p in (a, b, c):
        if p.is_ideal:
            raise NotFinite("orientation is defined for finite points only")
    d = _k.det3(a._t, b._t, c._t)
    # canonical finite triples have positive w, so the determinant sign is
    # the affine orientation sign
    return (d > 0) - (d < 0)


def classify_quadrilateral(a: Point, b: Point, c: Point, d: Point) -> Shape:
    """Shape class of the vertex sequence ``a b c d``.

    Counts the minority sign among the four consecutive orientation
    triples: none differing is convex, one is concave, two is crossed,
    and any zero (three collinear or repeated vertices) is degenerate.
    """
    signs = (
        orientation(a, b, c),
        orientation(b, c, d),
        orientation(c, d, a),
        orientation(d, a, b),
    )
    if 0 in signs:
        return DEGENERATE
    negatives = signs.count(-1)
    if negatives in (0, 4):
        return CONVEX
    if negatives in (1, 3):
        return CONCAVE
    return CROSSED


def affine_parameter(a: Point, b: Point, x: Point) -> Fraction:
    """The ``lam`` with ``x = a + lam*(b - a)`` for collinear finite points."""
    for p in (a, b, x):
        if p.is_ideal:
            raise NotFinite("affine parameters are defined for finite points only")
    if a == b:
        raise CoincidentEndpoints("segment endpoints coincide")
    if _k.det3(a._t, b._t, x._t) != 0:
        raise NotCollinear(f"{x!r} is not on the line through {a!r} and {b!r}")
    ax, ay = a.affine()
    bx, by = b.affine()
    xx, xy = x.affine()
    if ax != bx:
        return (xx - ax) / (bx - ax)
    return (xy - ay) / (by - ay)


def directed_ratio(a: Point, p: Point, b: Point) -> Fraction:
    """The exact division ratio in which ``p`` splits ``a -> b``."""
    lam = affine_parameter(a, b, p)
    if lam == 1:
        raise InfiniteRatio("division point coincides with the second endpoint")
    return lam / (1 - lam)


def point_dividing(a: Point, b: Point, ratio: RatLike) -> Point:
    """The finite point with ``directed_ratio(a, ., b)`` equal to ``ratio``."""
    t = as_rat(ratio)
    for p in (a, b):
        if p.is_ideal:
            raise NotFinite("division endpoints must be finite")
    if a == b:
        raise CoincidentPoints("division endpoints coincide")
    if t == -1:
        raise RatioMinusOne("ratio -1 corresponds to the point at infinity")
    lam = t / (1 + t)
    ax, ay = a.affine()
    bx, by = b.affine()
    return Point(ax + lam * (bx - ax), ay + lam * (by - ay))
