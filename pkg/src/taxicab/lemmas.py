"""Executable geometric facts about taxicab distance in the plane and in R^3.

Each oracle checks its own hypotheses and raises :class:`PreconditionError`
on inputs outside them; the identities are false there.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .geometry import (
    Configuration,
    Metric,
    Point,
    as_point,
    distance_set,
    l1_distance,
    l1_norm,
    rotated_basis_coords,
)

__all__ = [
    "PreconditionError",
    "EnclosingBall",
    "FacePattern",
    "LineReport",
    "enclosing_ball_2d",
    "strip_upper_hemisphere",
    "line_analysis",
    "same_face_distance",
    "opposite_face_distance",
    "neighbor_bound_holds",
    "semicircle_bound_check",
]


class PreconditionError(ValueError):
    """Input lies outside the hypotheses of the oracle."""


@dataclass(frozen=True)
class EnclosingBall:
    center: Point
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center))
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.radius <= 0:
            raise ValueError(f"radius must be positive, got {self.radius}")

    @property
    def diameter(self) -> Fraction:
        return 2 * self.radius

    def contains(self, p: Sequence[Fraction]) -> bool:
        return l1_distance(p, self.center) <= self.radius


@dataclass(frozen=True)
class FacePattern:
    """Sign constraints (+1, 0 or -1 per axis) picking out faces of an l1-sphere.

    0 leaves an axis unconstrained.
    """

    signs: tuple[int, ...]

    def __post_init__(self):
        if not self.signs or any(s not in (1, 0, -1) for s in self.signs):
            raise ValueError(f"face signs must be in {{+1, 0, -1}}, got {self.signs}")

    def admits(self, p: Sequence[Fraction]) -> bool:
        if len(p) != len(self.signs):
            return False
        return all(s * x >= 0 for s, x in zip(self.signs, p))


def enclosing_ball_2d(c: Configuration) -> EnclosingBall:
    """A closed l1-ball whose diameter is the largest l1-distance of ``c``.

    Take the bounding rectangle of ``c`` in the rotated basis (1,1), (-1,1);
    its longer side has width w, which makes the largest distance 2w. The
    shorter side is extended downward to length w, giving a 45-degree
    rotated square, i.e. an l1-ball of radius w.
    """
    if c.dimension != 2:
        raise PreconditionError(f"planar configuration required, got dimension {c.dimension}")
    if len(c) < 2:
        raise PreconditionError("at least two points are needed to have a diameter")
    coords = [rotated_basis_coords(p) for p in c]
    lo1 = min(a for a, _ in coords)
    hi1 = max(a for a, _ in coords)
    lo2 = min(b for _, b in coords)
    hi2 = max(b for _, b in coords)
    w1, w2 = hi1 - lo1, hi2 - lo2
    if w1 >= w2:
        lo2 = hi2 - w1
        w = w1
    else:
        lo1 = hi1 - w2
        w = w2
    m1, m2 = (lo1 + hi1) / 2, (lo2 + hi2) / 2
    return EnclosingBall((m1 - m2, m1 + m2), w)


def strip_upper_hemisphere(c: Configuration, b: EnclosingBall) -> Configuration:
    """Drop the points on the closed upper half of the boundary of ``b``."""
    if c.dimension != len(b.center):
        raise PreconditionError("ball and configuration dimensions differ")
    for p in c:
        if not b.contains(p):
            raise PreconditionError(f"point {p} lies outside the ball")
    cy = b.center[-1]
    kept = [
        p for p in c.points
        if not (l1_distance(p, b.center) == b.radius and p[-1] >= cy)
    ]
    return Configuration._trusted(frozenset(kept), c.dimension)


class LineReport(NamedTuple):
    collinear: bool
    count: int
    is_arithmetic_progression: bool


def _line_parameters(pts: Sequence[Point]) -> list[Fraction] | None:
    """Positions t with p = p0 + t * v, or None when the points are not collinear."""
    p0, p1 = pts[0], pts[1]
    v = tuple(b - a for a, b in zip(p0, p1))
    axis = next(i for i, x in enumerate(v) if x != 0)
    ts = []
    for p in pts:
        t = (p[axis] - p0[axis]) / v[axis]
        if any(p[i] - p0[i] != t * v[i] for i in range(len(v))):
            return None
        ts.append(t)
    return ts


def line_analysis(c: Configuration) -> LineReport:
    pts = c.sorted_points()
    n = len(pts)
    if n <= 2:
        return LineReport(True, n, True)
    ts = _line_parameters(pts)
    if ts is None:
        return LineReport(False, n, False)
    ts.sort()
    gaps = {b - a for a, b in zip(ts, ts[1:])}
    return LineReport(True, n, len(gaps) == 1)


def _pair3(v: Sequence, w: Sequence) -> tuple[Point, Point]:
    v, w = as_point(v), as_point(w)
    if len(v) != 3 or len(w) != 3:
        raise PreconditionError("points in R^3 required")
    return v, w


def same_face_distance(v: Sequence, w: Sequence) -> Fraction:
    """2 * max coordinate gap, the l1-distance of two points on one face of an l1-sphere."""
    v, w = _pair3(v, w)
    if l1_norm(v) != l1_norm(w):
        raise PreconditionError("points must have equal l1-norm")
    if any(a * b < 0 for a, b in zip(v, w)):
        raise PreconditionError("points must lie in a common closed orthant")
    return 2 * max(abs(a - b) for a, b in zip(v, w))


def opposite_face_distance(v: Sequence, w: Sequence) -> Fraction:
    """2 * (lambda - min height) for points on opposite faces of an upper l1-hemisphere."""
    v, w = _pair3(v, w)
    lam = l1_norm(v)
    if l1_norm(w) != lam:
        raise PreconditionError("points must have equal l1-norm")
    if v[0] * w[0] > 0 or v[1] * w[1] > 0:
        raise PreconditionError("first two coordinates must have opposite (or zero) signs")
    if v[2] < 0 or w[2] < 0:
        raise PreconditionError("points must lie on the upper hemisphere")
    return 2 * (lam - min(v[2], w[2]))


def neighbor_bound_holds(v: Sequence, w: Sequence) -> bool:
    """Check: on neighbouring faces, distance lambda forces |v_1| <= lambda / 2."""
    v, w = _pair3(v, w)
    lam = l1_norm(v)
    if lam <= 0 or l1_norm(w) != lam:
        raise PreconditionError("points must share a positive l1-norm")
    if v[0] * w[0] > 0 or v[1] * w[1] < 0 or v[2] * w[2] < 0:
        raise PreconditionError("points must lie on faces neighbouring across the first axis")
    return l1_distance(v, w) != lam or abs(v[0]) <= lam / 2


def semicircle_bound_check(
    s: Configuration,
    circle_center: Sequence,
    circle_radius,
    k: int,
) -> bool:
    """Check |s| <= 2k + 1 for a k-distance set on two adjacent sides of an l1-circle.

    Two adjacent sides of an l1-circle make up one closed half of it
    (upper, lower, left or right of the centre), so the hypothesis is that
    every point is on the circle and all points share one such half.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    center = as_point(circle_center)
    r = Fraction(circle_radius)
    if s.dimension != 2 or len(center) != 2:
        raise PreconditionError("planar input required")
    offsets = []
    for p in s:
        if l1_distance(p, center) != r:
            raise PreconditionError(f"point {p} is not on the l1-circle")
        offsets.append((p[0] - center[0], p[1] - center[1]))
    halves = (
        all(dy >= 0 for _, dy in offsets),
        all(dy <= 0 for _, dy in offsets),
        all(dx >= 0 for dx, _ in offsets),
        all(dx <= 0 for dx, _ in offsets),
    )
    if not any(halves):
        raise PreconditionError("points do not fit on two adjacent sides")
    if len(distance_set(s, Metric.L1)) > k:
        return True
    return len(s) <= 2 * k + 1
