"""One executable check per geometric claim.

Every verifier consumes a finished :class:`~quadconc.configuration.Configuration`
and returns a :class:`Verdict`; none of them recomputes construction
points, so a construction bug cannot be masked by a matching verifier
bug.  Formula sides are evaluated from the ratio fields ``m n p q``,
``gamma`` and ``r`` alone, while geometry sides use only meets and
directed ratios of stored points: the two routes are disjoint and must
agree exactly.

A verifier whose regime precondition is unmet (wrong ratio product,
wrong shape class) raises a :class:`~quadconc.errors.PreconditionNotMet`
subclass; :func:`verify_all` turns that into a ``skipped`` verdict, which
is never a failure.  In-configuration coincidences (flagged by the
builder) downgrade the verdict to ``degenerate``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .configuration import CONVEX, DIAGONAL_PAIRS, Configuration
from .errors import (
    GammaNotOne,
    GeometryError,
    NonconvexRequired,
    PreconditionNotMet,
    ShapeNotConvex,
)
from .kernel import (
    Line,
    Point,
    affine_parameter,
    classify_quadrilateral,
    collinear,
    directed_ratio,
    line_through,
)

PASS = "pass"
FAIL = "fail"
DEGENERATE = "degenerate"
SKIPPED = "skipped"

ONE = Fraction(1)
ZERO = Fraction(0)


@dataclass(frozen=True)
class Verdict:
    """Outcome of one claim on one configuration, with exact witnesses."""

    claim_id: str
    status: str
    detail: str = ""
    witness: Mapping[str, Point] = field(default_factory=dict)
    exact_values: Mapping[str, Fraction] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS


def _b01(flag: bool) -> Fraction:
    return ONE if flag else ZERO


def _join(u: Optional[Point], v: Optional[Point]) -> Optional[Line]:
    if u is None or v is None or u == v:
        return None
    return line_through(u, v)


def _ratio(a: Optional[Point], p: Optional[Point], b: Optional[Point]) -> Optional[Fraction]:
    if a is None or p is None or b is None:
        return None
    if a.is_ideal or p.is_ideal or b.is_ideal:
        return None
    try:
        return directed_ratio(a, p, b)
    except GeometryError:
        return None


def _missing(cfg: Configuration, names: Iterable[str]) -> list[str]:
    return [n for n in names if cfg.point(n) is None]


def _ideal(cfg: Configuration, names: Iterable[str]) -> list[str]:
    return [n for n in names if cfg.point(n) is not None and cfg.point(n).is_ideal]


def _require_gamma_one(cfg: Configuration) -> None:
    if cfg.ratios.gamma != 1:
        raise GammaNotOne(f"requires side-ratio product 1, got {cfg.ratios.gamma}")


def verify_diagonal_collinearity(cfg: Configuration) -> Verdict:
    """``X O Z`` and ``Y O T`` are collinear triples (product-one regime)."""
    _require_gamma_one(cfg)
    claim = "diagonal_collinearity"
    names = ("X", "O", "Z", "Y", "T")
    missing = _missing(cfg, names)
    if missing:
        return Verdict(claim, DEGENERATE, detail="undefined: " + ",".join(missing))
    c1 = collinear(cfg.X, cfg.O, cfg.Z)
    c2 = collinear(cfg.Y, cfg.O, cfg.T)
    values = {"X_O_Z_collinear": _b01(c1), "Y_O_T_collinear": _b01(c2)}
    ideal = _ideal(cfg, names)
    if ideal:
        return Verdict(claim, DEGENERATE, detail="ideal: " + ",".join(ideal), exact_values=values)
    return Verdict(claim, PASS if c1 and c2 else FAIL,
                   witness={"O": cfg.O}, exact_values=values)


def verify_seven_lines(cfg: Configuration) -> Verdict:
    """The two diagonal division points coincide pairwise and all seven
    lines ``AA1 BB1 CC1 DD1 MP NQ FG`` pass through ``E`` (product-one
    regime); also checks the division ratio of ``E`` on ``FG``."""
    _require_gamma_one(cfg)
    claim = "seven_lines"
    quad = cfg.quad
    missing = _missing(cfg, ("A1", "B1", "C1", "D1", "F1", "G1", "F2", "G2", "E"))
    if missing:
        return Verdict(claim, DEGENERATE, detail="undefined: " + ",".join(missing))

    degenerate_reasons: list[str] = []
    failures: list[str] = []
    values: dict[str, Fraction] = {}

    f_merge = cfg.F1 == cfg.F2
    g_merge = cfg.G1 == cfg.G2
    values["F1_equals_F2"] = _b01(f_merge)
    values["G1_equals_G2"] = _b01(g_merge)
    if not f_merge:
        failures.append("F1!=F2")
    if not g_merge:
        failures.append("G1!=G2")

    F, G = cfg.F1, cfg.G1
    lines: list[tuple[str, Optional[Line]]] = [
        ("AA1", _join(quad.A, cfg.A1)),
        ("BB1", _join(quad.B, cfg.B1)),
        ("CC1", _join(quad.C, cfg.C1)),
        ("DD1", _join(quad.D, cfg.D1)),
        ("MP", _join(cfg.M, cfg.P)),
        ("NQ", _join(cfg.N, cfg.Q)),
    ]
    if F == G:
        degenerate_reasons.append("F_EQ_G")
    else:
        lines.append(("FG", _join(F, G)))

    # coincident lines are deduplicated, not flagged: the concurrence
    # claim is unaffected by two of its lines being the same line
    distinct: list[tuple[str, Line]] = []
    for name, line in lines:
        if line is None:
            degenerate_reasons.append(name + "_UNDEFINED")
        elif not any(line == seen for _, seen in distinct):
            distinct.append((name, line))

    E = cfg.E
    if E.is_ideal:
        degenerate_reasons.append("E_IDEAL")
    if len(distinct) < 2:
        degenerate_reasons.append("CONCURRENCE_VACUOUS")
    else:
        for name, line in distinct:
            if not line.contains(E):
                failures.append(name + " misses E")

    if F != G:
        geometric = _ratio(F, E, G)
        m, n, p = cfg.ratios.m, cfg.ratios.n, cfg.ratios.p
        formula = m * (1 + n * p) / (1 + m * n)
        values["FE_over_EG_formula"] = formula
        if geometric is None:
            degenerate_reasons.append("FE_over_EG_UNDEFINED")
        else:
            values["FE_over_EG"] = geometric
            if geometric != formula:
                failures.append("FE/EG mismatch")

    if failures:
        status, detail = FAIL, "; ".join(failures)
    elif degenerate_reasons:
        status, detail = DEGENERATE, "; ".join(degenerate_reasons)
    else:
        status, detail = PASS, ""
    return Verdict(claim, status, detail=detail, witness={"E": E}, exact_values=values)


def verify_crossing_ratios(cfg: Configuration) -> Verdict:
    """Closed forms for ``ME/EP`` and ``NE/EQ`` in the product-one regime."""
    _require_gamma_one(cfg)
    claim = "crossing_ratios"
    E = cfg.E
    if E is None:
        return Verdict(claim, DEGENERATE, detail="undefined: E")
    if E.is_ideal:
        return Verdict(claim, DEGENERATE, detail="ideal: E (MP parallel to NQ)")
    m, n, p, q = cfg.ratios.as_tuple
    me_ep = _ratio(cfg.M, E, cfg.P)
    ne_eq = _ratio(cfg.N, E, cfg.Q)
    me_ep_formula = (1 / q) * (1 / (m + 1)) + n * (m / (m + 1))
    ne_eq_formula = (1 / m) * (1 / (n + 1)) + p * (n / (n + 1))
    values = {"ME_over_EP_formula": me_ep_formula, "NE_over_EQ_formula": ne_eq_formula}
    if me_ep is None or ne_eq is None:
        return Verdict(claim, DEGENERATE, detail="division ratios undefined",
                       exact_values=values)
    values["ME_over_EP"] = me_ep
    values["NE_over_EQ"] = ne_eq
    ok = me_ep == me_ep_formula and ne_eq == ne_eq_formula
    return Verdict(claim, PASS if ok else FAIL, witness={"E": E}, exact_values=values)


def verify_diagonal_concurrence_iff(cfg: Configuration) -> Verdict:
    """``MP NQ AC`` are concurrent exactly when ``DM BQ AC`` are
    (product-one regime): both reduce to an incidence with line ``AC``."""
    _require_gamma_one(cfg)
    claim = "diagonal_concurrence_iff"
    E, C1 = cfg.E, cfg.C1
    if E is None or C1 is None:
        return Verdict(claim, DEGENERATE, detail="undefined: " + ",".join(
            n for n, pt in (("E", E), ("C1", C1)) if pt is None))
    ac = line_through(cfg.quad.A, cfg.quad.C)
    e_on = ac.contains(E)
    c_on = ac.contains(C1)
    values = {"MP_NQ_AC_concurrent": _b01(e_on), "DM_BQ_AC_concurrent": _b01(c_on)}
    if E.is_ideal or C1.is_ideal:
        return Verdict(claim, DEGENERATE, detail="ideal: " + ",".join(
            n for n, pt in (("E", E), ("C1", C1)) if pt.is_ideal), exact_values=values)
    return Verdict(claim, PASS if e_on == c_on else FAIL, exact_values=values)


_QUADRUPLES = (
    ("M1", ("F1", "G1"), (("DD1", "D", "D1"), ("AA1", "A", "A1"), ("MP", "M", "P"))),
    ("N1", ("G1", "F2"), (("AA1", "A", "A1"), ("BB1", "B", "B1"), ("NQ", "N", "Q"))),
    ("P1", ("F2", "G2"), (("BB1", "B", "B1"), ("CC1", "C", "C1"), ("MP", "M", "P"))),
    ("Q1", ("G2", "F1"), (("CC1", "C", "C1"), ("DD1", "D", "D1"), ("NQ", "N", "Q"))),
)


def verify_general_concurrences(cfg: Configuration) -> Verdict:
    """Each of the four line quadruples meets in its stored point, at any
    ratio product; coincident diagonal division pairs drop their line and
    the remaining three must still concur.  Also checks the division
    ratio of ``M1`` on ``F1 G1``."""
    claim = "quadruple_concurrences"
    degenerate_reasons: list[str] = []
    failures: list[str] = []
    values: dict[str, Fraction] = {}
    witness: dict[str, Point] = {}

    for name, (u, v), cevians in _QUADRUPLES:
        target = cfg.point(name)
        if target is None:
            degenerate_reasons.append(name + "_UNDEFINED")
            continue
        witness[name] = target
        if target.is_ideal:
            degenerate_reasons.append(name + "_IDEAL")

        lines: list[tuple[str, Optional[Line]]] = []
        pu, pv = cfg.point(u), cfg.point(v)
        if pu is None or pv is None:
            degenerate_reasons.append(f"{u}{v}_UNDEFINED")
        elif pu == pv:
            degenerate_reasons.append(f"{u}_EQ_{v}")
        else:
            lines.append((u + v, _join(pu, pv)))
        for lname, s, t in cevians:
            lines.append((lname, _join(cfg.point(s), cfg.point(t))))

        distinct: list[tuple[str, Line]] = []
        for lname, line in lines:
            if line is None:
                degenerate_reasons.append(lname + "_UNDEFINED")
            elif not any(line == seen for _, seen in distinct):
                distinct.append((lname, line))
        if len(distinct) < 2:
            degenerate_reasons.append(name + "_VACUOUS")
            continue
        for lname, line in distinct:
            if not line.contains(target):
                failures.append(f"{lname} misses {name}")

    if cfg.F1 is not None and cfg.G1 is not None and cfg.F1 != cfg.G1:
        geometric = _ratio(cfg.F1, cfg.M1, cfg.G1)
        m, n, p = cfg.ratios.m, cfg.ratios.n, cfg.ratios.p
        formula = m * (n * p + 1) / (m * n + 1)
        values["F1M1_over_M1G1_formula"] = formula
        if geometric is None:
            degenerate_reasons.append("F1M1_over_M1G1_UNDEFINED")
        else:
            values["F1M1_over_M1G1"] = geometric
            if geometric != formula:
                failures.append("F1M1/M1G1 mismatch")

    if failures:
        status, detail = FAIL, "; ".join(failures)
    elif degenerate_reasons:
        status, detail = DEGENERATE, "; ".join(degenerate_reasons)
    else:
        status, detail = PASS, ""
    return Verdict(claim, status, detail=detail, witness=witness, exact_values=values)


def verify_ratio_product(cfg: Configuration) -> Verdict:
    """The four division ratios along the diagonal division segments
    multiply to exactly the side-ratio product."""
    claim = "ratio_product"
    coincident = [f"{u}_EQ_{v}" for u, v in DIAGONAL_PAIRS
                  if f"{u}_EQ_{v}" in cfg.degeneracies]
    if coincident:
        return Verdict(claim, DEGENERATE, detail="; ".join(coincident))
    sections = (
        ("F1M1_over_M1G1", "F1", "M1", "G1"),
        ("G1N1_over_N1F2", "G1", "N1", "F2"),
        ("F2P1_over_P1G2", "F2", "P1", "G2"),
        ("G2Q1_over_Q1F1", "G2", "Q1", "F1"),
    )
    values: dict[str, Fraction] = {}
    product = ONE
    for key, a, p, b in sections:
        r = _ratio(cfg.point(a), cfg.point(p), cfg.point(b))
        if r is None:
            return Verdict(claim, DEGENERATE, detail=key + " undefined", exact_values=values)
        values[key] = r
        product *= r
    values["product"] = product
    values["gamma"] = cfg.ratios.gamma
    ok = product == cfg.ratios.gamma
    return Verdict(claim, PASS if ok else FAIL, exact_values=values)


def verify_section_ratios(cfg: Configuration) -> Verdict:
    """Closed forms for the ratios in which ``M1 N1 P1 Q1`` divide the
    transversals ``MP`` and ``NQ``, in both the plain and the
    product-weighted form."""
    claim = "section_ratios"
    m, n, p, q = cfg.ratios.as_tuple
    gamma = cfg.ratios.gamma
    entries = (
        ("MM1_over_M1P", "M", "M1", "P", m * n * (p + 1) / (m + 1)),
        ("NN1_over_N1Q", "N", "N1", "Q", n * p * (q + 1) / (n + 1)),
        ("PP1_over_P1M", "P", "P1", "M", p * q * (m + 1) / (p + 1)),
        ("QQ1_over_Q1N", "Q", "Q1", "N", q * m * (n + 1) / (q + 1)),
    )
    values: dict[str, Fraction] = {
        "MM1_over_M1P_weighted": gamma * (1 / q) * (1 / (m + 1)) + n * (m / (m + 1)),
    }
    failures: list[str] = []
    for key, a, x, b, formula in entries:
        values[key + "_formula"] = formula
        geometric = _ratio(cfg.point(a), cfg.point(x), cfg.point(b))
        if geometric is None:
            return Verdict(claim, DEGENERATE, detail=key + " undefined", exact_values=values)
        values[key] = geometric
        if geometric != formula:
            failures.append(key)
    if values["MM1_over_M1P_weighted"] != values["MM1_over_M1P_formula"]:
        failures.append("weighted form mismatch")
    status = FAIL if failures else PASS
    return Verdict(claim, status, detail="; ".join(failures), exact_values=values)


def verify_crossing_ratio_formula(cfg: Configuration) -> Verdict:
    """The general closed form for ``ME/EP`` in terms of the unsigned
    trace ratio ``r`` of ``NQ`` on line ``AB`` (``r = 1`` when parallel);
    stated for convex quadrilaterals."""
    if cfg.quad.shape != CONVEX:
        raise ShapeNotConvex("the trace-ratio form is stated for convex quadrilaterals")
    claim = "crossing_ratio_formula"
    E = cfg.E
    if E is None or E.is_ideal:
        return Verdict(claim, DEGENERATE, detail="E undefined or ideal")
    m, n, p, q = cfg.ratios.as_tuple
    r = cfg.r_ratio
    gamma = cfg.ratios.gamma
    try:
        formula = m * n * (p + 1) / (m + 1) * (r + m) / (gamma * r + m)
    except ZeroDivisionError:
        return Verdict(claim, DEGENERATE, detail="formula denominator vanishes",
                       exact_values={"r": r})
    geometric = _ratio(cfg.M, E, cfg.P)
    values = {"r": r, "ME_over_EP_formula": formula}
    if geometric is None:
        return Verdict(claim, DEGENERATE, detail="ME/EP undefined", exact_values=values)
    values["ME_over_EP"] = geometric
    ok = geometric == formula
    return Verdict(claim, PASS if ok else FAIL, witness={"E": E}, exact_values=values)


def verify_inner_quadrilateral(cfg: Configuration) -> Verdict:
    """``E`` lies on both closed segments ``M1 P1`` and ``N1 Q1``, and the
    points along ``MP`` appear in the order dictated by the ratio-product
    trichotomy (convex quadrilaterals)."""
    if cfg.quad.shape != CONVEX:
        raise ShapeNotConvex("segment ordering claims require a convex quadrilateral")
    claim = "inner_quadrilateral"
    names = ("E", "M1", "N1", "P1", "Q1")
    missing = _missing(cfg, names)
    if missing:
        return Verdict(claim, DEGENERATE, detail="undefined: " + ",".join(missing))
    ideal = _ideal(cfg, names)
    if ideal:
        return Verdict(claim, DEGENERATE, detail="ideal: " + ",".join(ideal))

    gamma = cfg.ratios.gamma
    values: dict[str, Fraction] = {}
    failures: list[str] = []
    if gamma == 1:
        if not (cfg.M1 == cfg.E == cfg.P1 and cfg.N1 == cfg.E == cfg.Q1):
            failures.append("product-one collapse violated")
    else:
        try:
            lam_m1 = affine_parameter(cfg.M, cfg.P, cfg.M1)
            lam_e = affine_parameter(cfg.M, cfg.P, cfg.E)
            lam_p1 = affine_parameter(cfg.M, cfg.P, cfg.P1)
            lam_n1 = affine_parameter(cfg.N, cfg.Q, cfg.N1)
            lam_e2 = affine_parameter(cfg.N, cfg.Q, cfg.E)
            lam_q1 = affine_parameter(cfg.N, cfg.Q, cfg.Q1)
        except GeometryError as exc:
            return Verdict(claim, FAIL, detail=f"points left their carrier lines: {exc}")
        values.update({
            "lambda_M1_on_MP": lam_m1, "lambda_E_on_MP": lam_e,
            "lambda_P1_on_MP": lam_p1,
        })
        if gamma < 1:
            if not (0 < lam_m1 < lam_e < lam_p1 < 1):
                failures.append("order M-M1-E-P1-P violated")
        else:
            if not (0 < lam_p1 < lam_e < lam_m1 < 1):
                failures.append("order M-P1-E-M1-P violated")
        if not (min(lam_n1, lam_q1) <= lam_e2 <= max(lam_n1, lam_q1)):
            failures.append("E outside segment N1Q1")
    status = FAIL if failures else PASS
    return Verdict(claim, status, detail="; ".join(failures),
                   witness={"E": cfg.E}, exact_values=values)


def verify_inner_quad_convexity(cfg: Configuration) -> Verdict:
    """Empirical check on concave/crossed inputs: is ``M1 N1 P1 Q1``
    still convex (or collapsed)?  A failure here is a legitimate finding,
    not a defect."""
    if cfg.quad.shape == CONVEX:
        raise NonconvexRequired("the empirical convexity check targets nonconvex inputs")
    claim = "inner_quadrilateral_convexity"
    names = ("M1", "N1", "P1", "Q1")
    missing = _missing(cfg, names)
    if missing:
        return Verdict(claim, DEGENERATE, detail="undefined: " + ",".join(missing))
    ideal = _ideal(cfg, names)
    if ideal:
        return Verdict(claim, DEGENERATE, detail="ideal: " + ",".join(ideal))
    shape = classify_quadrilateral(cfg.M1, cfg.N1, cfg.P1, cfg.Q1)
    values = {"inner_quad_convex": _b01(shape == CONVEX)}
    if shape == "degenerate":
        return Verdict(claim, DEGENERATE, detail="inner quadrilateral collapsed",
                       exact_values=values)
    status = PASS if shape == CONVEX else FAIL
    return Verdict(claim, status, detail=f"inner quadrilateral is {shape}",
                   exact_values=values)


def verify_remarks(cfg: Configuration) -> Verdict:
    """Aggregate empirical run on a concave or crossed quadrilateral.

    Reports the transversal crossing-ratio check (when the ratio product
    is one) and the quadruple concurrences, which are expected to
    survive, and separately records whether the inner quadrilateral
    stayed convex, which is expected to break on some crossed inputs.
    """
    if cfg.quad.shape == CONVEX or cfg.quad.shape == "degenerate":
        raise NonconvexRequired("remarks apply to concave or crossed quadrilaterals")
    claim = "nonconvex_behavior"
    parts: list[str] = []
    sub_statuses: list[str] = []
    if cfg.ratios.gamma == 1:
        v = verify_crossing_ratios(cfg)
        parts.append(f"crossing_ratios={v.status}")
        sub_statuses.append(v.status)
    else:
        parts.append("crossing_ratios=skipped")
    v = verify_general_concurrences(cfg)
    parts.append(f"quadruple_concurrences={v.status}")
    sub_statuses.append(v.status)
    convexity = verify_inner_quad_convexity(cfg)
    parts.append(f"inner_quadrilateral_convexity={convexity.status}")
    values = dict(convexity.exact_values)
    if FAIL in sub_statuses:
        status = FAIL
    elif DEGENERATE in sub_statuses or convexity.status == DEGENERATE:
        status = DEGENERATE
    else:
        status = PASS
    return Verdict(claim, status, detail="; ".join(parts), exact_values=values)


# fixed claim order: product-one claims first, then the general suite,
# then the convexity claims
CLAIM_RUNNERS: tuple[tuple[str, Callable[[Configuration], Verdict]], ...] = (
    ("diagonal_collinearity", verify_diagonal_collinearity),
    ("seven_lines", verify_seven_lines),
    ("crossing_ratios", verify_crossing_ratios),
    ("diagonal_concurrence_iff", verify_diagonal_concurrence_iff),
    ("quadruple_concurrences", verify_general_concurrences),
    ("ratio_product", verify_ratio_product),
    ("section_ratios", verify_section_ratios),
    ("crossing_ratio_formula", verify_crossing_ratio_formula),
    ("inner_quadrilateral", verify_inner_quadrilateral),
    ("inner_quadrilateral_convexity", verify_inner_quad_convexity),
)

CLAIM_IDS: tuple[str, ...] = tuple(claim for claim, _ in CLAIM_RUNNERS)

# claims whose failure on nonconvex inputs is an expected finding rather
# than a suite failure
FINDING_CLAIMS: frozenset[str] = frozenset({"inner_quadrilateral_convexity"})


def verify_all(cfg: Configuration, checks: Sequence[str] | None = None) -> list[Verdict]:
    """Run the selected claims (all by default) in the fixed order.

    Claims whose regime precondition the configuration does not meet are
    reported as ``skipped``.
    """
    if checks is not None:
        unknown = sorted(set(checks) - set(CLAIM_IDS))
        if unknown:
            raise ValueError(f"unknown claim ids: {', '.join(unknown)}")
        wanted = set(checks)
    else:
        wanted = set(CLAIM_IDS)
    out: list[Verdict] = []
    for claim, runner in CLAIM_RUNNERS:
        if claim not in wanted:
            continue
        try:
            out.append(runner(cfg))
        except PreconditionNotMet as exc:
            out.append(Verdict(claim, SKIPPED, detail=str(exc)))
    return out


def overall_status(verdicts: Iterable[Verdict]) -> str:
    """``fail`` beats ``degenerate`` beats ``pass``; skips are neutral."""
    seen = [v.status for v in verdicts]
    if FAIL in seen:
        return FAIL
    if DEGENERATE in seen:
        return DEGENERATE
    return PASS
