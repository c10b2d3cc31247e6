"""Points, configurations, taxicab / Chebyshev distances and the Lambda_d(k) sets."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Metric",
    "Point",
    "Configuration",
    "DistanceSet",
    "DimensionMismatchError",
    "as_point",
    "l1_norm",
    "l1_distance",
    "linf_distance",
    "distance",
    "distance_set",
    "generate_lambda",
    "to_linf_plane",
    "rotated_basis_coords",
]

Point = tuple[Fraction, ...]


class DimensionMismatchError(ValueError):
    """Raised when points or configurations of different dimension are combined."""


class Metric(str, enum.Enum):
    L1 = "l1"
    LINF = "linf"


def as_point(coords: Iterable) -> Point:
    """Coerce ints, Fractions or strings like ``"3/4"`` into a point."""
    p = tuple(Fraction(c) for c in coords)
    if not p:
        raise ValueError("a point needs at least one coordinate")
    return p


def _check_dims(p: Sequence, q: Sequence) -> None:
    if len(p) != len(q):
        raise DimensionMismatchError(
            f"incompatible points: dimension {len(p)} vs {len(q)}"
        )


def l1_norm(p: Sequence[Fraction]) -> Fraction:
    return sum((abs(x) for x in p), Fraction(0))


def l1_distance(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    _check_dims(p, q)
    return sum((abs(a - b) for a, b in zip(p, q)), Fraction(0))


def linf_distance(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    _check_dims(p, q)
    return max((abs(a - b) for a, b in zip(p, q)), default=Fraction(0))


def distance(p: Sequence[Fraction], q: Sequence[Fraction], metric: Metric) -> Fraction:
    if Metric(metric) is Metric.L1:
        return l1_distance(p, q)
    return linf_distance(p, q)


class Configuration:
    """A finite set of points in R^d with exact rational coordinates.

    Duplicate points collapse silently. Iteration yields the points in
    lexicographic order. An empty configuration must be given its
    dimension explicitly.
    """

    __slots__ = ("dimension", "points", "_sorted")

    def __init__(self, points: Iterable[Iterable] = (), dimension: int | None = None):
        pts = frozenset(as_point(p) for p in points)
        if dimension is None:
            if not pts:
                raise ValueError("empty configuration needs an explicit dimension")
            dimension = len(next(iter(pts)))
        if dimension < 1:
            raise ValueError(f"dimension must be positive, got {dimension}")
        for p in pts:
            if len(p) != dimension:
                raise DimensionMismatchError(
                    f"point {p} has {len(p)} coordinates, expected {dimension}"
                )
        self.dimension = dimension
        self.points = pts
        self._sorted: tuple[Point, ...] | None = None

    @classmethod
    def _trusted(cls, points: frozenset, dimension: int) -> "Configuration":
        # Skip coercion for points already known to be tuples of Fractions.
        obj = cls.__new__(cls)
        obj.dimension = dimension
        obj.points = points
        obj._sorted = None
        return obj

    def sorted_points(self) -> tuple[Point, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.points))
        return self._sorted

    def __iter__(self) -> Iterator[Point]:
        return iter(self.sorted_points())

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p) -> bool:
        return tuple(Fraction(c) for c in p) in self.points

    def __eq__(self, other) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.dimension == other.dimension and self.points == other.points

    def __hash__(self) -> int:
        return hash((self.dimension, self.points))

    def __lt__(self, other: "Configuration") -> bool:
        return (self.dimension, self.sorted_points()) < (
            other.dimension,
            other.sorted_points(),
        )

    def __repr__(self) -> str:
        body = ", ".join(
            "(" + ", ".join(str(x) for x in p) + ")" for p in self.sorted_points()
        )
        return f"Configuration(d={self.dimension}, {{{body}}})"


@dataclass(frozen=True)
class DistanceSet:
    metric: Metric
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = self.values
        if any(v <= 0 for v in vals) or any(a >= b for a, b in zip(vals, vals[1:])):
            raise ValueError("distance values must be positive and strictly increasing")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)


def _integer_coords(points: Sequence[Point]) -> tuple[list[tuple[int, ...]], int]:
    """Scale points to integers; returns (integer points, common denominator)."""
    den = 1
    for p in points:
        for x in p:
            den = lcm(den, x.denominator)
    ints = [tuple(x.numerator * (den // x.denominator) for x in p) for p in points]
    return ints, den


# Stay well inside int64 when summing d absolute differences.
_INT64_SAFE = 2**60


def _pairwise_integer_distances(ints: list[tuple[int, ...]], metric: Metric) -> set[int]:
    n = len(ints)
    d = len(ints[0])
    bound = max((abs(x) for p in ints for x in p), default=0)
    if 2 * bound * d < _INT64_SAFE:
        arr = np.asarray(ints, dtype=np.int64)
        found: set[int] = set()
        # Row blocks keep the temporary at ~block*n*d integers.
        block = max(1, 2_000_000 // max(1, n * d))
        for start in range(0, n, block):
            diff = np.abs(arr[start:start + block, None, :] - arr[None, :, :])
            if metric is Metric.L1:
                dist = diff.sum(axis=2)
            else:
                dist = diff.max(axis=2)
            found.update(np.unique(dist).tolist())
        found.discard(0)
        return found
    found = set()
    for i in range(n):
        p = ints[i]
        for j in range(i + 1, n):
            q = ints[j]
            if metric is Metric.L1:
                found.add(sum(abs(a - b) for a, b in zip(p, q)))
            else:
                found.add(max(abs(a - b) for a, b in zip(p, q)))
    found.discard(0)
    return found


def distance_set(c: Configuration, metric: Metric = Metric.L1) -> DistanceSet:
    """Sorted distinct nonzero pairwise distances of ``c``.

    Coordinates are cleared to a common denominator and the pairwise
    differences are taken on integers, so the result is exact.
    """
    metric = Metric(metric)
    pts = c.sorted_points()
    if len(pts) <= 1:
        return DistanceSet(metric, ())
    ints, den = _integer_coords(pts)
    values = sorted(_pairwise_integer_distances(ints, metric))
    return DistanceSet(metric, tuple(Fraction(v, den) for v in values))


def generate_lambda(d: int, k: int) -> Configuration:
    """Integer points of l1-norm at most k whose coordinate sum has k's parity.

    Coordinates are enumerated depth-first with the remaining norm budget,
    which visits exactly the cross-polytope instead of the whole box.
    """
    if d < 1 or k < 0:
        raise ValueError(f"generate_lambda needs d >= 1 and k >= 0, got d={d}, k={k}")
    frac = {v: Fraction(v) for v in range(-k, k + 1)}
    out: list[Point] = []

    def rec(prefix: list[Fraction], budget: int, parity: int, left: int) -> None:
        if left == 0:
            if parity == k % 2:
                out.append(tuple(prefix))
            return
        for v in range(-budget, budget + 1):
            prefix.append(frac[v])
            rec(prefix, budget - abs(v), (parity + v) % 2, left - 1)
            prefix.pop()

    rec([], k, 0, d)
    config = Configuration._trusted(frozenset(out), d)
    config._sorted = tuple(out)
    return config


def _require_plane(p: Sequence) -> None:
    if len(p) != 2:
        raise DimensionMismatchError(f"expected a planar point, got dimension {len(p)}")


def to_linf_plane(p: Sequence[Fraction]) -> Point:
    """The map (x, y) -> (x + y, x - y), an isometry from l1 to l-infinity on R^2."""
    _require_plane(p)
    x, y = Fraction(p[0]), Fraction(p[1])
    return (x + y, x - y)


def rotated_basis_coords(p: Sequence[Fraction]) -> tuple[Fraction, Fraction]:
    """Coordinates (c1, c2) of p in the basis (1, 1), (-1, 1)."""
    _require_plane(p)
    x, y = Fraction(p[0]), Fraction(p[1])
    return (x + y) / 2, (y - x) / 2
