"""Closed-form conversions between side lengths, angles, and normal points.

The three one-vertex normal points have rational coordinates in the squared
side lengths plus one square root, so they can be computed without placing
any vertices.  The reverse direction reads angles straight off a normal
point with atan2, which stays correct on both sides of the vertical x = 1
where naive arctangent quotients flip sign.
"""

from __future__ import annotations

import math

from .errors import DegenerateAngles, InvalidSides, OutOfDomain, UnboundedType
from .geometry import DEFAULT_TOL, Point, Tolerance
from .triangles import AngleTriple, FormKind, SideLengths, in_domain

# radicand values in [-RADICAND_CLAMP * (a+b+c)^4, 0] are treated as exact
# degeneracy and clamped to zero; anything more negative is a real error
_RADICAND_CLAMP = 1e-12


class _DegenerateMarker:
    """Sentinel returned where a collinear input has no valid angle triple."""

    __slots__ = ()

    def __repr__(self) -> str:  # pragma: no cover - repr only
        return "DEGENERATE"


DEGENERATE = _DegenerateMarker()


def _radicand(a: float, b: float, c: float) -> float:
    # built from the squares only, so equal inputs cancel exactly; grouping
    # as a difference of comparable terms keeps the relative error small
    # even when two sides dwarf the third (fourth powers would round at a
    # scale far above the result there)
    aa, bb, cc = a * a, b * b, c * c
    return 2.0 * aa * (bb + cc) - aa * aa - (bb - cc) * (bb - cc)


def _height_root(a: float, b: float, c: float) -> float:
    r = _radicand(a, b, c)
    if r < 0.0:
        if r >= -_RADICAND_CLAMP * (a + b + c) ** 4:
            r = 0.0
        else:
            raise InvalidSides(f"triangle inequality fails for sides {(a, b, c)!r}")
    return math.sqrt(r)


def normal_point_from_sides(kind: FormKind, s: SideLengths) -> Point:
    """Closed-form normal point for any one-vertex form.

    The square root of the radicand equals four times the triangle area, so
    the second coordinate vanishes exactly on degenerate triples.
    """
    a, b, c = s.a, s.b, s.c
    root = _height_root(a, b, c)
    if kind is FormKind.C_VERTEX:
        den = 2.0 * c * c
        return Point((-a * a + b * b + c * c) / den, root / den)
    if kind is FormKind.B_VERTEX:
        den = 2.0 * b * b
        return Point((-a * a + b * b + c * c) / den, root / den)
    if kind is FormKind.A_VERTEX:
        if a == 0.0:
            raise UnboundedType("side lengths (0, c, c) have no finite shortest-side form")
        den = 2.0 * a * a
        return Point((a * a - b * b + c * c) / den, root / den)
    raise ValueError("the circle form has no single normal point")


def sides_from_angles(angles: AngleTriple, kind: FormKind = FormKind.C_VERTEX) -> SideLengths:
    """Side lengths by the law of sines, scaled so the kind's own side is 1."""
    alpha, beta, gamma = angles.as_tuple()
    sin_a = math.sin(alpha)
    sin_b = math.sin(beta)
    sin_g = math.sin(gamma)
    if kind is FormKind.C_VERTEX:
        return SideLengths.of(sin_a / sin_g, sin_b / sin_g, 1.0)
    if kind is FormKind.B_VERTEX:
        return SideLengths.of(sin_a / sin_b, 1.0, sin_g / sin_b)
    if kind is FormKind.A_VERTEX:
        if sin_a <= 0.0:
            raise DegenerateAngles("smallest angle must be positive for the shortest-side form")
        return SideLengths.of(1.0, sin_b / sin_a, sin_g / sin_a)
    raise ValueError("the circle form is built from angles directly")


def normal_point_from_angles(kind: FormKind, angles: AngleTriple) -> Point:
    """Normal point of the triangle with the given interior angles.

    In every one-vertex form the normal point sits at a polar angle equal
    to the interior angle at the origin anchor, at the radius the law of
    sines gives for the opposite side pair.  Evaluating that product
    directly avoids squared side lengths, whose rounding would dominate for
    needle shaped triples where two sides dwarf the third.
    """
    alpha, beta, gamma = angles.as_tuple()
    if kind is FormKind.C_VERTEX:
        radius, theta = math.sin(beta) / math.sin(gamma), alpha
    elif kind is FormKind.B_VERTEX:
        radius, theta = math.sin(gamma) / math.sin(beta), alpha
    elif kind is FormKind.A_VERTEX:
        radius, theta = math.sin(gamma) / math.sin(alpha), beta
    else:
        raise ValueError("the circle form has no single normal point")
    return Point(radius * math.cos(theta), radius * math.sin(theta))


def angles_from_normal_point(
    kind: FormKind, p: Point, tol: Tolerance = DEFAULT_TOL
) -> AngleTriple | _DegenerateMarker:
    """Interior angles of the normal triangle with third vertex p.

    Points on the x-axis (within tol.eps) describe collinear configurations
    and return the DEGENERATE marker instead of an angle triple.  atan2 is
    used throughout: the angle at the anchor (1, 0) is pi minus the ray
    angle of p seen from it, which stays correct across x = 1.
    """
    if not in_domain(kind, p, tol):
        raise OutOfDomain(f"{p} is outside the region of the {kind.value!r} form")
    if abs(p.y) <= tol.eps:
        return DEGENERATE
    at_origin = math.atan2(p.y, p.x)
    from_unit = math.pi - math.atan2(p.y, p.x - 1.0)
    if kind is FormKind.C_VERTEX:
        alpha = at_origin
        beta = math.atan2(p.y, 1.0 - p.x)
        gamma = math.pi - alpha - beta
    elif kind is FormKind.B_VERTEX:
        alpha = at_origin
        gamma = from_unit
        beta = math.pi - alpha - gamma
    elif kind is FormKind.A_VERTEX:
        beta = at_origin
        gamma = from_unit
        alpha = math.pi - beta - gamma
    else:
        raise ValueError("the circle form has no point domain")
    return AngleTriple(alpha, beta, gamma)


def angles_from_sides(s: SideLengths, tol: Tolerance = DEFAULT_TOL) -> AngleTriple:
    """Interior angles by the law of cosines.

    Degenerate triples (a + b = c or a = 0, judged relative to c) raise
    DegenerateAngles since no valid angle triple exists for them.
    """
    a, b, c = s.a, s.b, s.c
    if a <= tol.eps * c or a + b - c <= tol.eps * c:
        raise DegenerateAngles(f"sides {(a, b, c)!r} describe a degenerate triangle")
    cos_a = (b * b + c * c - a * a) / (2.0 * b * c)
    cos_b = (a * a + c * c - b * b) / (2.0 * a * c)
    alpha = math.acos(max(-1.0, min(1.0, cos_a)))
    beta = math.acos(max(-1.0, min(1.0, cos_b)))
    return AngleTriple(alpha, beta, math.pi - alpha - beta)
