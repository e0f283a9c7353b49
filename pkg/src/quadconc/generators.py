"""Seeded generation of random quadrilaterals and side-ratio tuples.

The generator is a plain splitmix64 stream so that any implementation,
in any language, can reproduce the exact same instances from the same
64-bit seed.  All constants are spelled out below and the stream keying
is a pure function of ``(seed, index, tag)``:

* state advance: ``state = (state + 0x9E3779B97F4A7C15) mod 2**64``
* output mix:    ``z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
  z *= 0x94D049BB133111EB; z ^= z >> 31`` (all mod 2**64)
* stream seed:   ``mix64(seed) XOR mix64(index * 0x9E3779B97F4A7C15 + tag)``
* bounded draw:  ``lo + next_u64() mod (hi - lo + 1)``

Rational draws take a numerator and a denominator from the bounded draw,
so coordinates and ratios stay within the configured magnitude bounds.
Instances are produced by rejection sampling with a hard cap of 1000
attempts per instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .configuration import Quadrilateral, SideRatios
from .errors import GenerationExhausted
from .kernel import CONCAVE, CONVEX, CROSSED, Point, Shape, orientation

# accepted by the generator only; never a classification result
ANY_SHAPE: Shape = "any"

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB

TAG_QUAD = 0x71
TAG_RATIOS = 0x72

REJECTION_CAP = 1000


def mix64(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * _MIX_A) & _MASK
    z = ((z ^ (z >> 27)) * _MIX_B) & _MASK
    return z ^ (z >> 31)


class Stream:
    """splitmix64 over a 64-bit state."""

    __slots__ = ("state",)

    def __init__(self, state: int):
        self.state = state & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        return mix64(self.state)

    def next_int(self, lo: int, hi: int) -> int:
        return lo + self.next_u64() % (hi - lo + 1)

    def next_coordinate(self, bound: int) -> Fraction:
        return Fraction(self.next_int(-bound, bound), self.next_int(1, bound))

    def next_positive(self, bound: int) -> Fraction:
        return Fraction(self.next_int(1, bound), self.next_int(1, bound))


def instance_stream(seed: int, index: int, tag: int) -> Stream:
    return Stream(mix64(seed) ^ mix64((index * _GOLDEN + tag) & _MASK))


@dataclass(frozen=True)
class GenSpec:
    """Parameters of a deterministic instance stream."""

    seed: int = 0
    shape: Shape = CONVEX
    coordinate_bound: int = 10
    ratio_bound: int = 8
    force_gamma_one: bool = False

    def __post_init__(self) -> None:
        if not 0 <= self.seed <= _MASK:
            raise ValueError("seed must fit in 64 bits")
        if self.shape not in (CONVEX, CONCAVE, CROSSED, ANY_SHAPE):
            raise ValueError(f"unknown shape {self.shape!r}")
        if self.coordinate_bound < 4:
            raise ValueError("coordinate_bound must be at least 4")
        if self.ratio_bound < 1:
            raise ValueError("ratio_bound must be at least 1")


def _ccw_about_centroid(points: list[Point]) -> list[Point]:
    coords = [p.affine() for p in points]
    cx = sum(c[0] for c in coords) / len(coords)
    cy = sum(c[1] for c in coords) / len(coords)

    def half(c: tuple[Fraction, Fraction]) -> int:
        dx, dy = c[0] - cx, c[1] - cy
        return 0 if dy > 0 or (dy == 0 and dx > 0) else 1

    def compare(i: int, j: int) -> int:
        ci, cj = coords[i], coords[j]
        hi, hj = half(ci), half(cj)
        if hi != hj:
            return -1 if hi < hj else 1
        cross = (ci[0] - cx) * (cj[1] - cy) - (ci[1] - cy) * (cj[0] - cx)
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    order = sorted(range(len(points)), key=cmp_to_key(compare))
    return [points[i] for i in order]


def _draw_point(rng: Stream, bound: int) -> Point:
    return Point(rng.next_coordinate(bound), rng.next_coordinate(bound))


def _try_convex(rng: Stream, bound: int) -> Quadrilateral | None:
    pts = [_draw_point(rng, bound) for _ in range(4)]
    if len({p for p in pts}) < 4:
        return None
    ordered = _ccw_about_centroid(pts)
    quad = Quadrilateral.of(*ordered)
    return quad if quad.shape == CONVEX else None


def _try_concave(rng: Stream, bound: int) -> Quadrilateral | None:
    a, b, c = (_draw_point(rng, bound) for _ in range(3))
    i, j, k = (rng.next_int(1, bound) for _ in range(3))
    sign = orientation(a, b, c) if len({a, b, c}) == 3 else 0
    if sign == 0:
        return None
    if sign < 0:
        b, c = c, b
    # interior point of the triangle, strictly inside by construction
    s = i + j + k
    ax, ay = a.affine()
    bx, by = b.affine()
    cx, cy = c.affine()
    x = Point(
        ax + Fraction(i, s) * (bx - ax) + Fraction(j, s) * (cx - ax),
        ay + Fraction(i, s) * (by - ay) + Fraction(j, s) * (cy - ay),
    )
    quad = Quadrilateral.of(a, b, x, c)
    return quad if quad.shape == CONCAVE else None


def _try_crossed(rng: Stream, bound: int) -> Quadrilateral | None:
    convex = _try_convex(rng, bound)
    if convex is None:
        return None
    quad = Quadrilateral.of(convex.B, convex.A, convex.C, convex.D)
    return quad if quad.shape == CROSSED else None


def _try_any(rng: Stream, bound: int) -> Quadrilateral | None:
    pts = [_draw_point(rng, bound) for _ in range(4)]
    if len({p for p in pts}) < 4:
        return None
    quad = Quadrilateral.of(*pts)
    return quad if quad.shape != "degenerate" else None


_DRAWERS = {
    CONVEX: _try_convex,
    CONCAVE: _try_concave,
    CROSSED: _try_crossed,
    ANY_SHAPE: _try_any,
}


def gen_quadrilateral(spec: GenSpec, index: int) -> Quadrilateral:
    """The quadrilateral of instance ``index``; bitwise-reproducible."""
    rng = instance_stream(spec.seed, index, TAG_QUAD)
    draw = _DRAWERS[spec.shape]
    for _ in range(REJECTION_CAP):
        quad = draw(rng, spec.coordinate_bound)
        if quad is not None:
            return quad
    raise GenerationExhausted(
        f"no {spec.shape} quadrilateral in {REJECTION_CAP} attempts (seed={spec.seed}, index={index})"
    )


def gen_ratios(spec: GenSpec, index: int) -> SideRatios:
    """The side-ratio tuple of instance ``index``; bitwise-reproducible."""
    rng = instance_stream(spec.seed, index, TAG_RATIOS)
    m = rng.next_positive(spec.ratio_bound)
    n = rng.next_positive(spec.ratio_bound)
    p = rng.next_positive(spec.ratio_bound)
    q = rng.next_positive(spec.ratio_bound)
    if spec.force_gamma_one:
        q = 1 / (m * n * p)
    return SideRatios(m, n, p, q)
