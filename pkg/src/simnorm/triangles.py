"""Triangle value types and the four similarity normal forms.

A triangle is a multiset of three points, at least two of them distinct.
Each nondegenerate similarity class has exactly one representative per
form: the three one-vertex forms pin two vertices to (0,0) and (1,0) and
put the remaining vertex in a closed region of the upper half plane, while
the circle form inscribes the triangle in the unit circle with one vertex
fixed at (1,0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateAngles, InvalidSides, UnboundedType
from .geometry import (
    DEFAULT_TOL,
    ORIGIN,
    Point,
    SimilarityTransform,
    Tolerance,
    distance,
    similarity_from_segment,
)

_EQUILATERAL_POINT = Point(0.5, math.sqrt(3.0) / 2.0)

# validation slack for value types; independent of predicate tolerances
_ANGLE_SLACK = 1e-9
_SIDE_SLACK = 1e-9


class FormKind(Enum):
    """Which normal form is requested."""

    A_VERTEX = "a"
    B_VERTEX = "b"
    C_VERTEX = "c"
    CIRCLE = "circle"


class AngleClass(Enum):
    ACUTE = "acute"
    RIGHT = "right"
    OBTUSE = "obtuse"
    DEGENERATE = "degenerate"


class SideClass(Enum):
    EQUILATERAL = "equilateral"
    ISOSCELES = "isosceles"
    SCALENE = "scalene"


@dataclass(frozen=True)
class TriangleClass:
    angle_class: AngleClass
    side_class: SideClass


@dataclass(frozen=True)
class Triangle:
    """Multiset of three vertices; at most one repeated point allowed."""

    vertices: tuple[Point, Point, Point]

    def __post_init__(self) -> None:
        u, v, w = self.vertices
        if u == v == w:
            raise ValueError("triangle needs at least two distinct vertices")

    @classmethod
    def of(cls, p: Point, q: Point, r: Point) -> Triangle:
        return cls((p, q, r))


@dataclass(frozen=True)
class SideLengths:
    """Sorted side lengths a <= b <= c of a (possibly degenerate) triangle."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        for v in (self.a, self.b, self.c):
            if not math.isfinite(v):
                raise InvalidSides(f"side lengths must be finite, got {v!r}")
        if self.a < 0.0:
            raise InvalidSides(f"side lengths must be nonnegative, got {self.a!r}")
        if not (self.a <= self.b <= self.c):
            raise InvalidSides(f"sides must be sorted ascending: {(self.a, self.b, self.c)!r}")
        if self.c <= 0.0:
            raise InvalidSides("longest side must be positive")
        if self.a + self.b < self.c - _SIDE_SLACK * self.c:
            raise InvalidSides(f"triangle inequality fails: {(self.a, self.b, self.c)!r}")

    @classmethod
    def of(cls, x: float, y: float, z: float) -> SideLengths:
        """Sort three lengths; order of arguments does not matter."""
        a, b, c = sorted((x, y, z))
        return cls(a, b, c)

    def ratios(self) -> tuple[float, float, float]:
        """Scale-free key (a/c, b/c, 1)."""
        return (self.a / self.c, self.b / self.c, 1.0)


@dataclass(frozen=True)
class AngleTriple:
    """Interior angles sorted ascending; alpha + beta + gamma = pi.

    The constructor sorts its arguments, so alpha is always the smallest
    angle.  Sorted triples automatically satisfy alpha <= pi/3 and
    beta <= (pi - alpha) / 2.
    """

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self) -> None:
        angles = (self.alpha, self.beta, self.gamma)
        for v in angles:
            if not math.isfinite(v):
                raise DegenerateAngles(f"angles must be finite, got {v!r}")
        alpha, beta, gamma = sorted(angles)
        if alpha <= 0.0:
            raise DegenerateAngles(f"smallest angle must be positive, got {alpha!r}")
        if abs(alpha + beta + gamma - math.pi) > _ANGLE_SLACK:
            raise DegenerateAngles(f"angles must sum to pi, got {alpha + beta + gamma!r}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.alpha, self.beta, self.gamma)


_PAIR_INDEXES = ((0, 1), (0, 2), (1, 2))

_X_AXIS_REFLECT = SimilarityTransform(reflect=True)
# reflection across the vertical line x = 1/2: conjugate, half turn, shift
_MIDLINE_REFLECT = SimilarityTransform(rotation=math.pi, reflect=True, translation=Point(1.0, 0.0))


def side_lengths(t: Triangle) -> SideLengths:
    """Sorted side lengths of a triangle."""
    u, v, w = t.vertices
    return SideLengths.of(distance(u, v), distance(u, w), distance(v, w))


def triangle_from_sides(s: SideLengths) -> Triangle:
    """A concrete triangle with the given side lengths.

    Places the longest side on the x-axis from the origin; the third vertex
    sits in the closed upper half plane.
    """
    a, b, c = s.a, s.b, s.c
    x = (-a * a + b * b + c * c) / (2.0 * c)
    y_sq = b * b - x * x
    y = math.sqrt(y_sq) if y_sq > 0.0 else 0.0
    return Triangle((ORIGIN, Point(c, 0.0), Point(x, y)))


def _sorted_side_pairs(t: Triangle) -> list[tuple[float, tuple[int, int]]]:
    v = t.vertices
    pairs = [(distance(v[i], v[j]), (i, j)) for i, j in _PAIR_INDEXES]
    pairs.sort()
    return pairs


def _one_vertex_point(t: Triangle, rank: int) -> Point:
    """Shared pipeline behind the three one-vertex forms.

    Moves the side of the requested rank (0 shortest, 2 longest) onto the
    x-axis starting at the origin, reflects the remaining vertex into the
    upper half plane, dilates the side to unit length, and finally reflects
    across x = 1/2 when needed.  The last reflection swaps the two anchor
    vertices, which is what makes the endpoint order immaterial.
    """
    pairs = _sorted_side_pairs(t)
    length, (i, j) = pairs[rank]
    k = 3 - i - j
    v = t.vertices
    place = similarity_from_segment(v[i], v[j], ORIGIN, Point(length, 0.0))
    p = place.apply(v[k])
    if p.y < 0.0:
        p = _X_AXIS_REFLECT.apply(p)
    p = SimilarityTransform(scale=1.0 / length).apply(p)
    if p.x < 0.5:
        p = _MIDLINE_REFLECT.apply(p)
    return p


def c_normal_point(t: Triangle) -> Point:
    """Normal point of the longest-side form.

    The longest side becomes the unit segment and the opposite vertex lands
    in the lens {y >= 0, x >= 1/2, x^2 + y^2 <= 1}.
    """
    return _one_vertex_point(t, 2)


def b_normal_point(t: Triangle) -> Point:
    """Normal point of the median-side form.

    The median side becomes the unit segment; the final reflection leaves
    the longest side incident to the origin, so the remaining vertex lands
    in {y >= 0, x >= 1/2, x^2 + y^2 >= 1, (x-1)^2 + y^2 <= 1}.
    """
    return _one_vertex_point(t, 1)


def a_normal_point(t: Triangle, tol: Tolerance = DEFAULT_TOL) -> Point:
    """Normal point of the shortest-side form.

    The region {y >= 0, x >= 1/2, (x-1)^2 + y^2 >= 1} is unbounded, and the
    side-length type (0, c, c) has no representative in it: the shortest
    side cannot be dilated to unit length.  Such triangles (shortest side
    within tol.eps of zero, relative to the longest) raise UnboundedType.
    """
    pairs = _sorted_side_pairs(t)
    if pairs[0][0] <= tol.eps * pairs[2][0]:
        raise UnboundedType("side lengths of type (0, c, c) have no finite shortest-side form")
    return _one_vertex_point(t, 0)


def normal_point(kind: FormKind, t: Triangle, tol: Tolerance = DEFAULT_TOL) -> Point:
    """Dispatch to the one-vertex normal point for the given kind."""
    if kind is FormKind.C_VERTEX:
        return c_normal_point(t)
    if kind is FormKind.B_VERTEX:
        return b_normal_point(t)
    if kind is FormKind.A_VERTEX:
        return a_normal_point(t, tol)
    raise ValueError("the circle form has no single normal point; use circle_normal_form")


def in_c_domain(p: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Membership in the longest-side region, inequalities relaxed by eps."""
    e = tol.eps
    return p.y >= -e and p.x >= 0.5 - e and p.x * p.x + p.y * p.y <= 1.0 + e


def in_b_domain(p: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Membership in the median-side region, inequalities relaxed by eps."""
    e = tol.eps
    return (
        p.y >= -e
        and p.x >= 0.5 - e
        and p.x * p.x + p.y * p.y >= 1.0 - e
        and (p.x - 1.0) ** 2 + p.y * p.y <= 1.0 + e
    )


def in_a_domain(p: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Membership in the (unbounded) shortest-side region."""
    e = tol.eps
    return p.y >= -e and p.x >= 0.5 - e and (p.x - 1.0) ** 2 + p.y * p.y >= 1.0 - e


def in_domain(kind: FormKind, p: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    if kind is FormKind.C_VERTEX:
        return in_c_domain(p, tol)
    if kind is FormKind.B_VERTEX:
        return in_b_domain(p, tol)
    if kind is FormKind.A_VERTEX:
        return in_a_domain(p, tol)
    raise ValueError("the circle form has no point domain")


def circle_normal_form(angles: AngleTriple) -> Triangle:
    """Inscribe the triangle with these angles in the unit circle.

    Fixes vertex C at (1, 0); the vertex carrying the smallest angle sits
    at polar angle 2*beta above the x-axis and the vertex carrying beta at
    polar angle -2*alpha below it, so every inscribed angle subtends twice
    itself at the center.  Vertices are returned in (A, B, C) order.
    """
    alpha, beta, _ = angles.as_tuple()
    if alpha <= 0.0:
        raise DegenerateAngles("circle form requires strictly positive angles")
    a_vtx = Point(math.cos(2.0 * beta), math.sin(2.0 * beta))
    b_vtx = Point(math.cos(2.0 * alpha), -math.sin(2.0 * alpha))
    return Triangle((a_vtx, b_vtx, Point(1.0, 0.0)))


def _vertex_angle(v: Point, p: Point, q: Point) -> float:
    """Interior angle at v between rays toward p and q, in [0, pi]."""
    ux, uy = p.x - v.x, p.y - v.y
    wx, wy = q.x - v.x, q.y - v.y
    cross = ux * wy - uy * wx
    dot = ux * wx + uy * wy
    return math.atan2(abs(cross), dot)


def is_normal_circle_triangle(t: Triangle, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Check whether t is exactly a circle-form representative.

    Requires all vertices on the unit circle, one vertex at (1, 0), one
    strictly above and one strictly below the x-axis, and the recovered
    smallest/median angles inside their constraint region.
    """
    e = tol.eps
    verts = t.vertices
    for v in verts:
        if abs(math.hypot(v.x, v.y) - 1.0) > e:
            return False
    anchor = [v for v in verts if abs(v.x - 1.0) <= e and abs(v.y) <= e]
    if len(anchor) != 1:
        return False
    rest = [v for v in verts if v is not anchor[0]]
    upper = max(rest, key=lambda v: v.y)
    lower = min(rest, key=lambda v: v.y)
    if not (upper.y > 0.0 and lower.y < 0.0):
        return False
    alpha = _vertex_angle(upper, lower, anchor[0])
    beta = _vertex_angle(lower, upper, anchor[0])
    if alpha > math.pi / 3.0 + e:
        return False
    if beta < alpha - e:
        return False
    if beta > math.pi / 2.0 - alpha / 2.0 + e:
        return False
    return True


def classify(t: Triangle, tol: Tolerance = DEFAULT_TOL) -> TriangleClass:
    """Angle class from the longest-side normal point, side class from ratios.

    Degeneracy wins over the right-angle test: the point (1, 0) lies on the
    right-angle arc but reports DEGENERATE.  The angle test compares the
    squared-radius residual (x - 1/2)^2 + y^2 - 1/4 against eps, which for
    side lengths matches the Pythagorean gap a^2 + b^2 - c^2 scaled by
    1 / (2 c^2).
    """
    e = tol.eps
    p = c_normal_point(t)
    if p.y <= e:
        angle = AngleClass.DEGENERATE
    else:
        residual = (p.x - 0.5) ** 2 + p.y * p.y - 0.25
        if abs(residual) <= e:
            angle = AngleClass.RIGHT
        elif residual < 0.0:
            angle = AngleClass.OBTUSE
        else:
            angle = AngleClass.ACUTE
    s = side_lengths(t)
    u = s.a / s.c
    v = s.b / s.c
    if 1.0 - u <= e:
        side = SideClass.EQUILATERAL
    elif v - u <= e or 1.0 - v <= e:
        side = SideClass.ISOSCELES
    else:
        side = SideClass.SCALENE
    return TriangleClass(angle, side)


def triangles_similar(t1: Triangle, t2: Triangle, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Similarity test via the longest-side canonical key."""
    return c_normal_point(t1).close_to(c_normal_point(t2), tol)


def equilateral_point() -> Point:
    """The shared normal point (1/2, sqrt(3)/2) of equilateral triangles."""
    return _EQUILATERAL_POINT
