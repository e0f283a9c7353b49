from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from quadconc import (
    Point,
    collinear,
    directed_ratio,
    line_through,
    meet,
    orientation,
    point_dividing,
)

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=50
)
points = st.builds(Point, rationals, rationals)
nonzero_rationals = rationals.filter(lambda f: f != 0)


@given(points, points, rationals)
def test_division_round_trip(a, b, t):
    assume(a != b)
    assume(t != -1)
    assert directed_ratio(a, point_dividing(a, b, t), b) == t


@given(points, points, points)
def test_incidence_of_joins(p, q, r):
    assume(not collinear(p, q, r))
    assert meet(line_through(p, q), line_through(p, r)) == p


@given(points, points, nonzero_rationals, nonzero_rationals)
def test_projective_scaling_changes_nothing(p, q, s1, s2):
    assume(p != q)
    ps = Point(s1 * p.x, s1 * p.y, s1 * p.w)
    qs = Point(s2 * q.x, s2 * q.y, s2 * q.w)
    assert ps == p
    assert qs == q
    assert line_through(ps, qs) == line_through(p, q)


@given(points, points, points)
def test_collinear_permutation_invariance(p, q, r):
    base = collinear(p, q, r)
    assert collinear(p, r, q) == base
    assert collinear(q, p, r) == base
    assert collinear(q, r, p) == base
    assert collinear(r, p, q) == base
    assert collinear(r, q, p) == base


@given(points, points, points)
def test_orientation_antisymmetry(a, b, c):
    assert orientation(a, b, c) == -orientation(b, a, c)


@given(points, points, points)
def test_orientation_cyclic_invariance(a, b, c):
    assert orientation(a, b, c) == orientation(b, c, a) == orientation(c, a, b)


@given(points, points)
def test_join_incidence(p, q):
    assume(p != q)
    line = line_through(p, q)
    assert line.contains(p)
    assert line.contains(q)


@given(points, points, points, points)
@settings(max_examples=50)
def test_meet_lies_on_both_lines(p1, q1, p2, q2):
    assume(p1 != q1 and p2 != q2)
    l1 = line_through(p1, q1)
    l2 = line_through(p2, q2)
    assume(l1 != l2)
    x = meet(l1, l2)
    assert l1.contains(x)
    assert l2.contains(x)
