"""Closed-form conversions between sides, angles, and normal points."""

import math
import random

import pytest

from helpers import near_boundary_angles, rand_angles, rand_thick_triangle
from simnorm import (
    DEGENERATE,
    AngleTriple,
    DegenerateAngles,
    FormKind,
    InvalidSides,
    OutOfDomain,
    Point,
    SideLengths,
    Tolerance,
    UnboundedType,
    angles_from_normal_point,
    angles_from_sides,
    c_normal_point,
    normal_point_from_angles,
    normal_point_from_sides,
    side_lengths,
    sides_from_angles,
    triangle_from_sides,
)
from simnorm.conversions import _radicand

ONE_POINT_KINDS = (FormKind.C_VERTEX, FormKind.B_VERTEX, FormKind.A_VERTEX)

RIGHT_345 = AngleTriple(math.asin(0.6), math.asin(0.8), math.pi / 2.0)


# closed-form landmarks


def test_points_from_sides_345():
    s = SideLengths.of(3.0, 4.0, 5.0)
    assert normal_point_from_sides(FormKind.C_VERTEX, s).close_to(Point(0.64, 0.48), Tolerance(1e-12))
    assert normal_point_from_sides(FormKind.B_VERTEX, s).close_to(Point(1.0, 0.75), Tolerance(1e-12))
    assert normal_point_from_sides(FormKind.A_VERTEX, s).close_to(
        Point(1.0, 4.0 / 3.0), Tolerance(1e-12)
    )


def test_points_from_sides_equilateral():
    s = SideLengths.of(2.0, 2.0, 2.0)
    want = Point(0.5, math.sqrt(3.0) / 2.0)
    for kind in ONE_POINT_KINDS:
        assert normal_point_from_sides(kind, s).close_to(want, Tolerance(1e-12))


def test_degenerate_sides_give_exact_axis_points():
    s = SideLengths.of(0.0, 2.5, 2.5)
    assert normal_point_from_sides(FormKind.C_VERTEX, s) == Point(1.0, 0.0)
    assert normal_point_from_sides(FormKind.B_VERTEX, s) == Point(1.0, 0.0)
    with pytest.raises(UnboundedType):
        normal_point_from_sides(FormKind.A_VERTEX, s)
    flat = SideLengths.of(1.0, 2.0, 3.0)
    p = normal_point_from_sides(FormKind.C_VERTEX, flat)
    assert p.y == 0.0
    assert p.x == pytest.approx(2.0 / 3.0, abs=1e-15)


def test_circle_kind_has_no_point():
    with pytest.raises(ValueError):
        normal_point_from_sides(FormKind.CIRCLE, SideLengths.of(3.0, 4.0, 5.0))
    with pytest.raises(ValueError):
        normal_point_from_angles(FormKind.CIRCLE, RIGHT_345)
    with pytest.raises(ValueError):
        angles_from_normal_point(FormKind.CIRCLE, Point(0.64, 0.48))


def test_points_from_angles_landmarks():
    assert normal_point_from_angles(FormKind.C_VERTEX, RIGHT_345).close_to(
        Point(0.64, 0.48), Tolerance(1e-12)
    )
    assert normal_point_from_angles(FormKind.A_VERTEX, RIGHT_345).close_to(
        Point(1.0, 4.0 / 3.0), Tolerance(1e-12)
    )
    iso_right = AngleTriple(math.pi / 4.0, math.pi / 4.0, math.pi / 2.0)
    assert normal_point_from_angles(FormKind.B_VERTEX, iso_right).close_to(
        Point(1.0, 1.0), Tolerance(1e-12)
    )


def test_sides_from_angles_normalizes_the_kind_side():
    for kind, idx in ((FormKind.C_VERTEX, 2), (FormKind.B_VERTEX, 1), (FormKind.A_VERTEX, 0)):
        s = sides_from_angles(RIGHT_345, kind)
        assert (s.a, s.b, s.c)[idx] == 1.0
    s = sides_from_angles(RIGHT_345, FormKind.C_VERTEX)
    assert s.a == pytest.approx(0.6, abs=1e-15)
    assert s.b == pytest.approx(0.8, abs=1e-15)
    with pytest.raises(ValueError):
        sides_from_angles(RIGHT_345, FormKind.CIRCLE)


def test_angles_from_sides_landmarks():
    got = angles_from_sides(SideLengths.of(3.0, 4.0, 5.0))
    assert got.alpha == pytest.approx(math.asin(0.6), abs=1e-12)
    assert got.beta == pytest.approx(math.asin(0.8), abs=1e-12)
    assert got.gamma == pytest.approx(math.pi / 2.0, abs=1e-12)
    eq = angles_from_sides(SideLengths.of(7.0, 7.0, 7.0))
    for value in eq.as_tuple():
        assert value == pytest.approx(math.pi / 3.0, abs=1e-12)


def test_angles_from_sides_degenerate_inputs():
    with pytest.raises(DegenerateAngles):
        angles_from_sides(SideLengths.of(1.0, 2.0, 3.0))
    with pytest.raises(DegenerateAngles):
        angles_from_sides(SideLengths.of(0.0, 1.0, 1.0))


# inverse direction


def test_angles_from_normal_point_landmarks():
    back = angles_from_normal_point(FormKind.C_VERTEX, Point(0.64, 0.48))
    assert back.alpha == pytest.approx(math.asin(0.6), abs=1e-12)
    assert back.gamma == pytest.approx(math.pi / 2.0, abs=1e-12)
    back = angles_from_normal_point(FormKind.A_VERTEX, Point(1.0, 4.0 / 3.0))
    assert back.alpha == pytest.approx(math.asin(0.6), abs=1e-12)
    eq = angles_from_normal_point(FormKind.B_VERTEX, Point(0.5, math.sqrt(3.0) / 2.0))
    for value in eq.as_tuple():
        assert value == pytest.approx(math.pi / 3.0, abs=1e-12)


def test_angles_from_normal_point_degenerate_marker():
    assert angles_from_normal_point(FormKind.C_VERTEX, Point(0.75, 0.0)) is DEGENERATE
    assert angles_from_normal_point(FormKind.C_VERTEX, Point(1.0, 0.0)) is DEGENERATE
    assert angles_from_normal_point(FormKind.B_VERTEX, Point(1.5, 0.0)) is DEGENERATE
    assert repr(DEGENERATE) == "DEGENERATE"


def test_angles_from_normal_point_rejects_outside_points():
    with pytest.raises(OutOfDomain):
        angles_from_normal_point(FormKind.C_VERTEX, Point(3.0, 3.0))
    with pytest.raises(OutOfDomain):
        angles_from_normal_point(FormKind.C_VERTEX, Point(0.2, 0.2))
    with pytest.raises(OutOfDomain):
        angles_from_normal_point(FormKind.B_VERTEX, Point(0.9, 0.1))
    with pytest.raises(OutOfDomain):
        angles_from_normal_point(FormKind.A_VERTEX, Point(0.8, 0.3))


# roundtrips


def test_angle_roundtrip_all_kinds():
    rng = random.Random(501)
    for i in range(400):
        vals = near_boundary_angles(rng) if i % 2 == 0 else rand_angles(rng)
        ang = AngleTriple(*vals)
        for kind in ONE_POINT_KINDS:
            back = angles_from_normal_point(kind, normal_point_from_angles(kind, ang))
            assert back is not DEGENERATE
            for want, have in zip(ang.as_tuple(), back.as_tuple()):
                assert abs(want - have) <= 1e-9


def test_side_ratio_roundtrip_all_kinds():
    rng = random.Random(502)
    for i in range(400):
        if i % 4 == 0:
            s = sides_from_angles(AngleTriple(*near_boundary_angles(rng)))
        else:
            s = side_lengths(rand_thick_triangle(rng))
        for kind in ONE_POINT_KINDS:
            back = angles_from_normal_point(kind, normal_point_from_sides(kind, s))
            assert back is not DEGENERATE
            recovered = sides_from_angles(back, kind)
            for want, have in zip(s.ratios(), recovered.ratios()):
                assert abs(want - have) <= 1e-7


def test_trig_route_matches_sides_route():
    rng = random.Random(503)
    for _ in range(300):
        ang = AngleTriple(*rand_angles(rng))
        for kind in ONE_POINT_KINDS:
            via_trig = normal_point_from_angles(kind, ang)
            via_sides = normal_point_from_sides(kind, sides_from_angles(ang, kind))
            assert via_trig.close_to(via_sides, Tolerance(1e-9))


def test_closed_form_matches_pipeline():
    rng = random.Random(504)
    for _ in range(300):
        t = rand_thick_triangle(rng)
        s = side_lengths(t)
        assert normal_point_from_sides(FormKind.C_VERTEX, s).close_to(
            c_normal_point(t), Tolerance(1e-9)
        )


def test_angles_from_sides_matches_point_route():
    rng = random.Random(505)
    for _ in range(200):
        s = side_lengths(rand_thick_triangle(rng))
        direct = angles_from_sides(s)
        via_point = angles_from_normal_point(
            FormKind.C_VERTEX, normal_point_from_sides(FormKind.C_VERTEX, s)
        )
        for want, have in zip(direct.as_tuple(), via_point.as_tuple()):
            assert abs(want - have) <= 1e-9


# the radicand


def test_radicand_matches_factored_product():
    rng = random.Random(506)
    for _ in range(300):
        s = side_lengths(rand_thick_triangle(rng))
        a, b, c = s.a, s.b, s.c
        product = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
        # thin triples lose relative accuracy in both routes alike, so the
        # comparison carries an absolute floor at the natural fourth-power scale
        floor = 1e-12 * (a + b + c) ** 4
        assert _radicand(a, b, c) == pytest.approx(product, rel=1e-9, abs=floor)


def test_radicand_vanishes_exactly_on_equal_split():
    # a zero shortest side with the other two equal must cancel exactly,
    # whatever the magnitudes involved
    for b in (0.1, 1.0, 3.7, 1e6, 12345.6789):
        assert _radicand(0.0, b, b) == 0.0


def test_height_clamp_window():
    # a hair beyond flat from rounding alone is clamped to the axis
    s = SideLengths.of(1.0, 1.0, 2.0 - 1e-13)
    p = normal_point_from_sides(FormKind.C_VERTEX, s)
    assert p.y >= 0.0
    # far beyond the clamp window the triple is rejected outright
    with pytest.raises(InvalidSides):
        normal_point_from_sides(FormKind.C_VERTEX, SideLengths(1.0, 1.0, 2.0 + 1e-10))


def test_triangle_from_degenerate_sides():
    t = triangle_from_sides(SideLengths.of(1.0, 2.0, 3.0))
    s = side_lengths(t)
    assert s.a == pytest.approx(1.0, abs=1e-12)
    assert s.b == pytest.approx(2.0, abs=1e-12)
    assert s.c == pytest.approx(3.0, abs=1e-12)
