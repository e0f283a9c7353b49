"""Construction of the full named-point configuration of a quadrilateral.

Given vertices ``A B C D`` and one point per side (``M`` on ``AB``, ``N``
on ``BC``, ``P`` on ``CD``, ``Q`` on ``DA``), this module derives every
named intersection the verifiers consume: the diagonal meet ``O``, the
four cross meets ``X Y Z T``, the cevian meets ``A1 B1 C1 D1``, the
diagonal division points ``F1 G1 F2 G2``, the transversal crossing ``E``,
the quadruple-concurrence points ``M1 N1 P1 Q1``, and the trace ``R`` of
``NQ`` on line ``AB`` together with its unsigned ratio ``r``.

Coincidences the construction can survive are recorded as named
degeneracy flags instead of raising; a point is stored as ``None`` only
when one of its defining lines collapses entirely.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import (
    CoincidentPoints,
    DegenerateQuadrilateral,
    PointNotOnSide,
    ShapeNotConvex,
    UndefinedPoint,
)
from .kernel import (
    CONVEX,
    DEGENERATE,
    Point,
    RatLike,
    Shape,
    affine_parameter,
    as_rat,
    classify_quadrilateral,
    collinear,
    line_through,
    meet,
    point_dividing,
)

# fields of Configuration that hold constructed points, in report order
POINT_NAMES = (
    "M", "N", "P", "Q",
    "O", "X", "Y", "Z", "T",
    "A1", "B1", "C1", "D1",
    "F1", "G1", "F2", "G2",
    "E", "M1", "N1", "P1", "Q1", "R",
)

# the point pairs whose coincidence collapses one of the four lines
# joining consecutive diagonal division points
DIAGONAL_PAIRS = (
    ("F1", "G1"),
    ("G1", "F2"),
    ("F2", "G2"),
    ("G2", "F1"),
)

# R ideal is an in-convention case (its ratio is defined to be 1), so it
# does not count as a degeneracy
_IDEAL_IS_EXPECTED = frozenset({"R"})


@dataclass(frozen=True)
class Quadrilateral:
    """Four labeled finite vertices plus their shape class."""

    A: Point
    B: Point
    C: Point
    D: Point
    shape: Shape

    @classmethod
    def of(cls, a: Point, b: Point, c: Point, d: Point) -> "Quadrilateral":
        vs = (a, b, c, d)
        for i in range(4):
            for j in range(i + 1, 4):
                if vs[i] == vs[j]:
                    raise CoincidentPoints("quadrilateral vertices must be distinct")
        return cls(a, b, c, d, classify_quadrilateral(a, b, c, d))

    @property
    def vertices(self) -> tuple[Point, Point, Point, Point]:
        return (self.A, self.B, self.C, self.D)


@dataclass(frozen=True)
class SideRatios:
    """The tuple ``(m, n, p, q)`` of side division ratios and their product."""

    m: Fraction
    n: Fraction
    p: Fraction
    q: Fraction
    gamma: Fraction = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma", self.m * self.n * self.p * self.q)

    @classmethod
    def of(cls, m: RatLike, n: RatLike, p: RatLike, q: RatLike) -> "SideRatios":
        return cls(as_rat(m), as_rat(n), as_rat(p), as_rat(q))

    @property
    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.m, self.n, self.p, self.q)


@dataclass(frozen=True)
class Configuration:
    """All named points derived from a quadrilateral and its side points."""

    quad: Quadrilateral
    ratios: SideRatios
    M: Point
    N: Point
    P: Point
    Q: Point
    O: Optional[Point]
    X: Optional[Point]
    Y: Optional[Point]
    Z: Optional[Point]
    T: Optional[Point]
    A1: Optional[Point]
    B1: Optional[Point]
    C1: Optional[Point]
    D1: Optional[Point]
    F1: Optional[Point]
    G1: Optional[Point]
    F2: Optional[Point]
    G2: Optional[Point]
    E: Optional[Point]
    M1: Optional[Point]
    N1: Optional[Point]
    P1: Optional[Point]
    Q1: Optional[Point]
    R: Optional[Point]
    r_ratio: Fraction
    degeneracies: frozenset[str]

    def point(self, name: str) -> Optional[Point]:
        if name in ("A", "B", "C", "D"):
            return getattr(self.quad, name)
        if name in POINT_NAMES:
            return getattr(self, name)
        raise KeyError(name)

    def named_points(self) -> dict[str, Optional[Point]]:
        out: dict[str, Optional[Point]] = {
            "A": self.quad.A, "B": self.quad.B, "C": self.quad.C, "D": self.quad.D,
        }
        for name in POINT_NAMES:
            out[name] = getattr(self, name)
        return out

    def finite_point(self, name: str) -> Optional[Point]:
        """The named point if it exists and is finite, else ``None``."""
        pt = self.point(name)
        if pt is None or pt.is_ideal:
            return None
        return pt


class _Builder:
    def __init__(self) -> None:
        self.flags: set[str] = set()

    def join(self, u: Optional[Point], v: Optional[Point]):
        if u is None or v is None or u == v:
            return None
        return line_through(u, v)

    def cut(self, name: str, l1, l2) -> Optional[Point]:
        if l1 is None or l2 is None:
            self.flags.add(f"{name}_UNDEFINED")
            return None
        if l1 == l2:
            raise UndefinedPoint(name)
        pt = meet(l1, l2)
        if pt.is_ideal and name not in _IDEAL_IS_EXPECTED:
            self.flags.add(f"{name}_IDEAL")
        return pt


def _construct(quad: Quadrilateral, ratios: SideRatios,
               side_points: tuple[Point, Point, Point, Point] | None = None) -> Configuration:
    A, B, C, D = quad.vertices
    if side_points is None:
        M = point_dividing(A, B, ratios.m)
        N = point_dividing(B, C, ratios.n)
        P = point_dividing(C, D, ratios.p)
        Q = point_dividing(D, A, ratios.q)
    else:
        M, N, P, Q = side_points

    b = _Builder()
    lAC = b.join(A, C)
    lBD = b.join(B, D)
    O = b.cut("O", lAC, lBD)

    lAN = b.join(A, N)
    lBQ = b.join(B, Q)
    lDN = b.join(D, N)
    lCQ = b.join(C, Q)
    lCM = b.join(C, M)
    lBP = b.join(B, P)
    lAP = b.join(A, P)
    lDM = b.join(D, M)

    X = b.cut("X", lAN, lBQ)
    Z = b.cut("Z", lDN, lCQ)
    Y = b.cut("Y", lCM, lBP)
    T = b.cut("T", lAP, lDM)

    A1 = b.cut("A1", lBP, lDN)
    B1 = b.cut("B1", lAP, lCQ)
    C1 = b.cut("C1", lBQ, lDM)
    D1 = b.cut("D1", lAN, lCM)

    F1 = b.cut("F1", b.join(B, D1), lAC)
    G1 = b.cut("G1", b.join(C, A1), lBD)
    F2 = b.cut("F2", b.join(D, B1), lAC)
    G2 = b.cut("G2", b.join(A, C1), lBD)

    lMP = b.join(M, P)
    lNQ = b.join(N, Q)
    E = b.cut("E", lMP, lNQ)

    lAA1 = b.join(A, A1)
    lBB1 = b.join(B, B1)
    lCC1 = b.join(C, C1)
    lDD1 = b.join(D, D1)
    M1 = b.cut("M1", lAA1, lDD1)
    N1 = b.cut("N1", lAA1, lBB1)
    P1 = b.cut("P1", lBB1, lCC1)
    Q1 = b.cut("Q1", lCC1, lDD1)

    lAB = b.join(A, B)
    R = b.cut("R", lNQ, lAB)
    r_ratio = Fraction(1)
    if R is None:
        pass
    elif R.is_ideal:
        pass
    else:
        lam = affine_parameter(A, B, R)
        if lam == 1:
            # R fell on vertex B; the unsigned ratio RA/RB is infinite
            b.flags.add("R_RATIO_UNDEFINED")
        else:
            r_ratio = abs(lam / (1 - lam))

    diag_points = {"F1": F1, "G1": G1, "F2": F2, "G2": G2}
    for u, v in DIAGONAL_PAIRS:
        pu, pv = diag_points[u], diag_points[v]
        if pu is not None and pv is not None and pu == pv:
            b.flags.add(f"{u}_EQ_{v}")

    return Configuration(
        quad=quad, ratios=ratios,
        M=M, N=N, P=P, Q=Q,
        O=O, X=X, Y=Y, Z=Z, T=T,
        A1=A1, B1=B1, C1=C1, D1=D1,
        F1=F1, G1=G1, F2=F2, G2=G2,
        E=E, M1=M1, N1=N1, P1=P1, Q1=Q1,
        R=R, r_ratio=r_ratio,
        degeneracies=frozenset(b.flags),
    )


def build_from_ratios(quad: Quadrilateral, ratios: SideRatios) -> Configuration:
    """Place the side points at the given positive ratios and derive everything."""
    if quad.shape == DEGENERATE:
        raise DegenerateQuadrilateral("cannot build on a degenerate quadrilateral")
    if any(r <= 0 for r in ratios.as_tuple):
        raise ValueError("side ratios must be positive")
    return _construct(quad, ratios)


def build_from_points(quad: Quadrilateral, M: Point, N: Point, P: Point, Q: Point) -> Configuration:
    """Recover the side ratios from explicit side points, then construct.

    Each point must lie on the line of its side and differ from the
    side's endpoints; for convex quadrilaterals it must additionally lie
    strictly inside the open segment.
    """
    if quad.shape == DEGENERATE:
        raise DegenerateQuadrilateral("cannot build on a degenerate quadrilateral")
    A, B, C, D = quad.vertices
    sides = (("M", M, A, B), ("N", N, B, C), ("P", P, C, D), ("Q", Q, D, A))
    ratios = []
    for name, pt, u, v in sides:
        if pt.is_ideal:
            raise PointNotOnSide(name, f"{name} must be a finite point")
        if pt == u or pt == v:
            raise PointNotOnSide(name, f"{name} coincides with a vertex")
        if not collinear(u, pt, v):
            raise PointNotOnSide(name)
        lam = affine_parameter(u, v, pt)
        if quad.shape == CONVEX and not (0 < lam < 1):
            raise PointNotOnSide(name, f"{name} is outside its open side")
        ratios.append(lam / (1 - lam))
    return _construct(quad, SideRatios(*ratios), side_points=(M, N, P, Q))


def build_from_two_points(quad: Quadrilateral, M: Point, N: Point) -> Configuration:
    """Complete a configuration from ``M`` and ``N`` alone.

    ``S`` and ``T`` are the traces of ``DM`` and ``DN`` on the diagonal
    ``AC``; ``Q = BS ∩ AD`` and ``P = BT ∩ CD`` then force the product of
    the four side ratios to be exactly one, so the whole product-one
    claim family applies to the result.
    """
    if quad.shape != CONVEX:
        raise ShapeNotConvex("the two-point completion is defined for convex quadrilaterals")
    A, B, C, D = quad.vertices
    for name, pt, u, v in (("M", M, A, B), ("N", N, B, C)):
        if pt.is_ideal or not collinear(u, pt, v):
            raise PointNotOnSide(name)
        lam = affine_parameter(u, v, pt)
        if not (0 < lam < 1):
            raise PointNotOnSide(name, f"{name} is outside its open side")

    lAC = line_through(A, C)

    def cut(name: str, l1, l2) -> Point:
        if l1 == l2:
            raise UndefinedPoint(name)
        return meet(l1, l2)

    S = cut("S", line_through(D, M), lAC)
    T = cut("T", line_through(D, N), lAC)
    for name, pt in (("S", S), ("T", T)):
        if pt.is_ideal:
            raise UndefinedPoint(name, f"{name} is ideal")
        if pt == B:
            raise UndefinedPoint(name, f"{name} coincides with B")
    Q = cut("Q", line_through(B, S), line_through(A, D))
    P = cut("P", line_through(B, T), line_through(C, D))
    return build_from_points(quad, M, N, P, Q)


def cyclic_relabel(quad: Quadrilateral, ratios: SideRatios) -> tuple[Quadrilateral, SideRatios]:
    """One step of the configuration's cyclic symmetry.

    Shifts the vertex labels ``A -> B -> C -> D -> A`` together with the
    side ratios ``m -> n -> p -> q -> m``; rebuilding on the result maps
    every named point onto a named point of the original.
    """
    return (
        Quadrilateral.of(quad.B, quad.C, quad.D, quad.A),
        SideRatios(ratios.n, ratios.p, ratios.q, ratios.m),
    )
