from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from geohit.geom import (
    DimensionError,
    Disc,
    GeometricInstance,
    HalfSpace,
    Point,
    contains,
    format_rational,
    general_position_3d,
    squared_distance,
    to_rational,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


def test_halfplane_boundary_is_inside():
    assert contains(HalfSpace([1, 0], 0), Point([1, 0]))
    assert contains(HalfSpace([1, 0], 0), Point([0, 5]))
    assert not contains(HalfSpace([1, 0], 0), Point(["-1/1000000", 0]))


def test_disc_membership():
    assert not contains(Disc([0, 0], 1), Point([2, 0]))
    assert contains(Disc([0, 0], 1), Point([1, 0]))


def test_lemma_point_one_vertex_example():
    h = HalfSpace([1, 1], 1)
    x = Point([Fraction(32, 15), Fraction(-16, 15)])
    assert h.value(x) == Fraction(16, 15)
    assert contains(h, x)


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        contains(HalfSpace([1, 0, 0], 0), Point([1, 0]))
    with pytest.raises(DimensionError):
        squared_distance(Point([0]), Point([0, 0]))


def test_invalid_ranges():
    with pytest.raises(ValueError):
        HalfSpace([0, 0], 1)
    with pytest.raises(ValueError):
        Disc([0, 0], -1)
    with pytest.raises(TypeError):
        Point([0.5, 1])


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ((0, 0), (0, 0), 0),
        ((0, 0), (3, 4), 25),
        (("1/2", 0), (0, "1/2"), Fraction(1, 2)),
    ],
)
def test_squared_distance(a, b, expected):
    assert squared_distance(Point(a), Point(b)) == expected


def test_general_position():
    six = [Point(p) for p in [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (2, 3, 5)]]
    assert general_position_3d(six)
    flat = [Point(p) for p in [(0, 0, 7), (1, 0, 7), (0, 1, 7), (5, 3, 7), (1, 1, 1), (2, 3, 5)]]
    assert not general_position_3d(flat)
    assert not general_position_3d([Point((0, 0, 0))] * 6)
    with pytest.raises(ValueError):
        general_position_3d(six[:5])


def test_instance_rejects_discs_outside_plane():
    with pytest.raises(DimensionError):
        GeometricInstance(3, [Point([0, 0, 0])], [Disc([0, 0], 1)])


def test_rational_format():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert to_rational("-3/2") == Fraction(-3, 2)


@given(
    st.lists(rationals, min_size=3, max_size=3),
    rationals,
    st.lists(rationals, min_size=3, max_size=3),
    st.fractions(min_value=Fraction(1, 50), max_value=100, max_denominator=50),
)
def test_halfspace_scaling_invariance(normal, offset, coords, factor):
    if not any(normal):
        normal[0] = Fraction(1)
    h = HalfSpace(normal, offset)
    p = Point(coords)
    assert contains(h, p) == contains(h.scaled(factor), p)


@given(st.lists(rationals, min_size=2, max_size=2), st.lists(rationals, min_size=2, max_size=2))
def test_disc_closure_and_symmetry(c, q):
    a, b = Point(c), Point(q)
    d = squared_distance(a, b)
    assert d == squared_distance(b, a)
    assert (d == 0) == (a == b)
    assert contains(Disc(a, d), b)
