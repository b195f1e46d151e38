"""Plane-geometry foundation: points, tolerances, similarity transforms, orderings.

Everything in this module is an immutable value or a pure function of its
arguments, so it is safe to share between threads and to memoize.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateSegment

TAU = math.tau


@dataclass(frozen=True)
class Tolerance:
    """Absolute threshold used by the geometric predicates.

    Orderings (lex_less and the quasilexicographic comparisons) stay exact;
    only region membership, classification, and tie detection consult eps.
    Comparisons are meaningful well below unit scale because every canonical
    configuration lives at unit scale, hence the hard upper bound on eps.
    """

    eps: float = 1e-9

    def __post_init__(self) -> None:
        if not (0.0 < self.eps < 1e-3):
            raise ValueError(f"tolerance eps must lie in (0, 1e-3), got {self.eps!r}")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Point:
    """A position in the Cartesian plane."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x!r}, {self.y!r})")

    def close_to(self, other: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
        """Coordinatewise agreement within tol.eps."""
        return abs(self.x - other.x) <= tol.eps and abs(self.y - other.y) <= tol.eps


ORIGIN = Point(0.0, 0.0)
UNIT_X = Point(1.0, 0.0)


def distance(p: Point, q: Point) -> float:
    """Euclidean distance between two points."""
    return math.hypot(q.x - p.x, q.y - p.y)


@dataclass(frozen=True)
class SimilarityTransform:
    """A plane similarity in factored form.

    Applies, in order: reflection across the x-axis (when ``reflect`` is
    set), rotation by ``rotation`` radians about the origin, dilation by
    ``scale``, and translation by ``translation``.  A negative scale is
    folded into an extra half turn on construction, so the stored scale is
    always positive and the orientation class can be read off ``reflect``.
    """

    scale: float = 1.0
    rotation: float = 0.0
    reflect: bool = False
    translation: Point = ORIGIN

    def __post_init__(self) -> None:
        if not math.isfinite(self.scale) or self.scale == 0.0:
            raise ValueError(f"scale must be finite and nonzero, got {self.scale!r}")
        if not math.isfinite(self.rotation):
            raise ValueError(f"rotation must be finite, got {self.rotation!r}")
        scale, rotation = self.scale, self.rotation
        if scale < 0.0:
            scale, rotation = -scale, rotation + math.pi
        # keep the angle in [-pi, pi] so transforms differing by full turns
        # compare equal
        rotation = math.remainder(rotation, TAU)
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "rotation", rotation)

    @classmethod
    def identity(cls) -> SimilarityTransform:
        return cls()

    @property
    def is_direct(self) -> bool:
        return not self.reflect

    def apply(self, p: Point) -> Point:
        x, y = p.x, p.y
        if self.reflect:
            y = -y
        cos_r = math.cos(self.rotation)
        sin_r = math.sin(self.rotation)
        return Point(
            self.scale * (cos_r * x - sin_r * y) + self.translation.x,
            self.scale * (sin_r * x + cos_r * y) + self.translation.y,
        )

    def compose(self, other: SimilarityTransform) -> SimilarityTransform:
        """The transform acting as ``other`` first, then ``self``."""
        if self.reflect:
            rotation = self.rotation - other.rotation
        else:
            rotation = self.rotation + other.rotation
        return SimilarityTransform(
            scale=self.scale * other.scale,
            rotation=rotation,
            reflect=self.reflect != other.reflect,
            translation=self.apply(other.translation),
        )


def similarity_from_segment(
    p1: Point,
    p2: Point,
    q1: Point,
    q2: Point,
    reflect: bool = False,
    tol: Tolerance = DEFAULT_TOL,
) -> SimilarityTransform:
    """The unique similarity taking p1 to q1 and p2 to q2.

    With reflect=False the result is direct (orientation preserving), with
    reflect=True it is indirect.  Either endpoint pair collapsing within
    tol.eps raises DegenerateSegment; the threshold is absolute, matching
    the unit-scale tolerance policy.
    """
    if distance(p1, p2) <= tol.eps:
        raise DegenerateSegment(f"source segment endpoints coincide: {p1}, {p2}")
    if distance(q1, q2) <= tol.eps:
        raise DegenerateSegment(f"target segment endpoints coincide: {q1}, {q2}")
    px = p2.x - p1.x
    py = p2.y - p1.y
    qx = q2.x - q1.x
    qy = q2.y - q1.y
    if reflect:
        py = -py
    # complex ratio a = (q2 - q1) / (p2 - p1), conjugating the source first
    # when a reflection is requested
    den = px * px + py * py
    ax = (qx * px + qy * py) / den
    ay = (qy * px - qx * py) / den
    p1x = p1.x
    p1y = -p1.y if reflect else p1.y
    return SimilarityTransform(
        scale=math.hypot(ax, ay),
        rotation=math.atan2(ay, ax),
        reflect=reflect,
        translation=Point(q1.x - (ax * p1x - ay * p1y), q1.y - (ax * p1y + ay * p1x)),
    )


def lex_less(p: Point, q: Point) -> bool:
    """Strict lexicographic order: first coordinates, then second. Exact."""
    return p.x < q.x or (p.x == q.x and p.y < q.y)


def reflect_normalize(p: Point) -> Point:
    """Map p into the quadrant x >= 1/2, y >= 0 by its mirror images.

    Reflections across the x-axis and across the vertical line x = 1/2 fix
    the anchor pair {(0,0), (1,0)} as a set; this picks the orbit member in
    the upper right quadrant of that symmetry group.
    """
    return Point(0.5 + abs(p.x - 0.5), abs(p.y))


def quasilex_leq(p: Point, q: Point) -> bool:
    """Total preorder: compare reflect-normalized images lexicographically."""
    ps = reflect_normalize(p)
    qs = reflect_normalize(q)
    return lex_less(ps, qs) or (ps.x == qs.x and ps.y == qs.y)


def quasilex_eq(p: Point, q: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Tolerance-aware tie test: the normalized images coincide within tol."""
    return reflect_normalize(p).close_to(reflect_normalize(q), tol)


def quasilex_pair_leq(pq: tuple[Point, Point], rs: tuple[Point, Point]) -> bool:
    """Order on point pairs: leading points first, trailing points break ties."""
    p, q = pq
    r, s = rs
    ps = reflect_normalize(p)
    rs_ = reflect_normalize(r)
    if lex_less(ps, rs_):
        return True
    if ps.x != rs_.x or ps.y != rs_.y:
        return False
    return quasilex_leq(q, s)
