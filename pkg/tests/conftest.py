from fractions import Fraction

import pytest

from quadconc import Point, Quadrilateral, SideRatios, build_from_ratios


@pytest.fixture
def unit_square():
    return Quadrilateral.of(Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1))


@pytest.fixture
def midpoint_config(unit_square):
    return build_from_ratios(unit_square, SideRatios.of(1, 1, 1, 1))


@pytest.fixture
def gamma_one_config(unit_square):
    # ratios (2, 1, 1/2, 1): product one without any symmetry
    return build_from_ratios(unit_square, SideRatios.of(2, 1, Fraction(1, 2), 1))


@pytest.fixture
def gamma_two_config(unit_square):
    # ratios (1, 1, 1, 2): the reference instance with E = (1/2, 5/12)
    return build_from_ratios(unit_square, SideRatios.of(1, 1, 1, 2))


@pytest.fixture
def generic_gamma_two_config():
    quad = Quadrilateral.of(Point(0, 0), Point(4, 0), Point(5, 3), Point(1, 4))
    return build_from_ratios(quad, SideRatios.of(1, 2, 1, 1))


@pytest.fixture
def crossed_quad():
    return Quadrilateral.of(Point(0, 0), Point(1, 1), Point(1, 0), Point(0, 1))


@pytest.fixture
def concave_quad():
    return Quadrilateral.of(Point(0, 0), Point(4, 0), Point(1, 1), Point(0, 4))
