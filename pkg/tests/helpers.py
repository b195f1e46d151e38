"""Seeded random generators shared by the test modules.

All sampling goes through an explicit random.Random instance so every
test run sees the same inputs.  Degenerate triangles are generated on a
dyadic grid (multiples of 1/32) where distance arithmetic is exact;
random rotations would turn an exact zero area into sqrt-amplified
noise and the tests would measure rounding instead of the geometry.
"""

from __future__ import annotations

import math
import random

from simnorm import Point, Quadrilateral, SimilarityTransform, Triangle

# rejection threshold: |cross| relative to longest side squared
MIN_THICKNESS = 1e-6


def rand_point(rng: random.Random, span: float = 10.0) -> Point:
    return Point(rng.uniform(-span, span), rng.uniform(-span, span))


def dyadic(rng: random.Random, limit: int = 64) -> float:
    return rng.randrange(-limit, limit + 1) / 32.0


def _thickness(p: Point, q: Point, r: Point) -> float:
    cross = abs((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))
    longest = max(math.dist((p.x, p.y), (q.x, q.y)),
                  math.dist((p.x, p.y), (r.x, r.y)),
                  math.dist((q.x, q.y), (r.x, r.y)))
    return cross / (longest * longest)


def rand_thick_triangle(rng: random.Random, span: float = 10.0) -> Triangle:
    """Nondegenerate triangle, rejection-sampled away from collinearity."""
    while True:
        p, q, r = (rand_point(rng, span) for _ in range(3))
        if _thickness(p, q, r) >= MIN_THICKNESS:
            return Triangle.of(p, q, r)


def collinear_triangle(rng: random.Random) -> Triangle:
    """Exactly degenerate: three distinct dyadic points on one horizontal line."""
    y = dyadic(rng)
    xs = rng.sample(range(-64, 65), 3)
    verts = [Point(x / 32.0, y) for x in xs]
    rng.shuffle(verts)
    return Triangle.of(*verts)


def repeated_vertex_triangle(rng: random.Random, span: float = 10.0) -> Triangle:
    p = rand_point(rng, span)
    q = rand_point(rng, span)
    verts = [p, q, rng.choice((p, q))]
    rng.shuffle(verts)
    return Triangle.of(*verts)


def rand_triangle(
    rng: random.Random,
    degenerate_fraction: float = 0.0,
    repeat_fraction: float = 0.0,
    span: float = 10.0,
) -> Triangle:
    roll = rng.random()
    if roll < repeat_fraction:
        return repeated_vertex_triangle(rng, span)
    if roll < repeat_fraction + degenerate_fraction:
        return collinear_triangle(rng)
    return rand_thick_triangle(rng, span)


def rand_transform(
    rng: random.Random, lo: float = 1e-3, hi: float = 1e3
) -> SimilarityTransform:
    return SimilarityTransform(
        scale=math.exp(rng.uniform(math.log(lo), math.log(hi))),
        rotation=rng.uniform(-math.pi, math.pi),
        reflect=rng.random() < 0.5,
        translation=rand_point(rng, 5.0),
    )


def apply_to_triangle(g: SimilarityTransform, t: Triangle) -> Triangle:
    return Triangle.of(*(g.apply(v) for v in t.vertices))


def apply_to_quad(g: SimilarityTransform, q: Quadrilateral) -> Quadrilateral:
    return Quadrilateral.of(*(g.apply(v) for v in q.vertices))


def permuted_quad(rng: random.Random, q: Quadrilateral) -> Quadrilateral:
    verts = list(q.vertices)
    rng.shuffle(verts)
    return Quadrilateral.of(*verts)


def rand_angles(rng: random.Random, margin: float = 1e-3) -> tuple[float, float, float]:
    """A sorted valid angle triple sampled inside the constraint region."""
    alpha = rng.uniform(margin, math.pi / 3.0 - margin)
    beta = rng.uniform(alpha, math.pi / 2.0 - alpha / 2.0 - margin)
    return (alpha, beta, math.pi - alpha - beta)


def near_boundary_angles(rng: random.Random, gap: float = 1e-6) -> tuple[float, float, float]:
    """Angle triples within gap of a constraint boundary or the right angle."""
    mode = rng.randrange(5)
    if mode == 0:
        # alpha near its upper corner pi/3 (equilateral)
        alpha = math.pi / 3.0 - rng.uniform(0.0, gap)
        beta = rng.uniform(alpha, math.pi / 2.0 - alpha / 2.0)
    elif mode == 1:
        # beta pinned near alpha (isosceles edge)
        alpha = rng.uniform(0.2, math.pi / 3.0 - 0.01)
        beta = alpha + rng.uniform(0.0, gap)
    elif mode == 2:
        # beta near its upper bound (the other isosceles edge)
        alpha = rng.uniform(0.2, math.pi / 3.0 - 0.01)
        beta = math.pi / 2.0 - alpha / 2.0 - rng.uniform(0.0, gap)
    elif mode == 3:
        # gamma near the right angle
        alpha = rng.uniform(0.2, math.pi / 4.0 - 0.01)
        beta = math.pi / 2.0 - alpha + rng.uniform(-gap, gap)
    else:
        # alpha near zero (almost degenerate)
        alpha = gap * rng.uniform(0.5, 1.0)
        beta = rng.uniform(0.3, math.pi / 2.0 - alpha / 2.0 - 0.01)
    return (alpha, beta, math.pi - alpha - beta)


def rand_quad(rng: random.Random, special_fraction: float = 0.0, span: float = 10.0) -> Quadrilateral:
    """Random 4-point multiset; special cases stress the tie-break paths."""
    if rng.random() < special_fraction:
        mode = rng.randrange(4)
        if mode == 0:
            # square
            base = (Point(0.0, 0.0), Point(1.0, 0.0), Point(1.0, 1.0), Point(0.0, 1.0))
        elif mode == 1:
            # rhombus from two reflected equilateral halves
            h = math.sqrt(3.0) / 2.0
            base = (Point(0.0, 0.0), Point(1.0, 0.0), Point(1.5, h), Point(0.5, h))
        elif mode == 2:
            # collinear dyadic points
            y = dyadic(rng)
            xs = rng.sample(range(-64, 65), 4)
            base = tuple(Point(x / 32.0, y) for x in xs)
        else:
            # repeated vertex
            p, q, r = (rand_point(rng, span) for _ in range(3))
            base = (p, q, r, rng.choice((p, q, r)))
        verts = list(base)
        rng.shuffle(verts)
        return Quadrilateral.of(*verts)
    return Quadrilateral.of(*(rand_point(rng, span) for _ in range(4)))
