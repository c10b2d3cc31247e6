"""l1-similarity: translations, coordinate reflections, dilations and coordinate
permutations, plus a canonical normal form for each similarity class."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Sequence

from .geometry import (
    Configuration,
    DimensionMismatchError,
    Metric,
    Point,
    as_point,
    distance,
)

__all__ = [
    "SimilarityTransform",
    "signed_permutations",
    "apply_transform",
    "canonicalize",
    "canonical_key",
    "are_similar",
    "is_axis_parallel",
]


@dataclass(frozen=True)
class SimilarityTransform:
    """p -> translation + scale * (signs[i] * p[permutation[i]])_i.

    ``permutation`` is 0-based: output coordinate i reads input coordinate
    ``permutation[i]``.
    """

    permutation: tuple[int, ...]
    signs: tuple[int, ...]
    scale: Fraction = Fraction(1)
    translation: Point | None = None

    def __post_init__(self):
        d = len(self.permutation)
        if sorted(self.permutation) != list(range(d)):
            raise ValueError(f"not a permutation of 0..{d - 1}: {self.permutation}")
        if len(self.signs) != d or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be {d} values in {{+1, -1}}")
        object.__setattr__(self, "scale", Fraction(self.scale))
        if self.scale <= 0:
            raise ValueError(f"scale must be positive, got {self.scale}")
        t = (Fraction(0),) * d if self.translation is None else as_point(self.translation)
        if len(t) != d:
            raise DimensionMismatchError(f"translation has dimension {len(t)}, expected {d}")
        object.__setattr__(self, "translation", t)

    @property
    def dimension(self) -> int:
        return len(self.permutation)

    @classmethod
    def identity(cls, d: int) -> "SimilarityTransform":
        return cls(tuple(range(d)), (1,) * d)

    def __call__(self, p: Sequence[Fraction]) -> Point:
        if len(p) != self.dimension:
            raise DimensionMismatchError(
                f"transform of dimension {self.dimension} applied to point of dimension {len(p)}"
            )
        return tuple(
            t + self.scale * s * p[j]
            for t, s, j in zip(self.translation, self.signs, self.permutation)
        )


@lru_cache(maxsize=None)
def signed_permutations(d: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """All 2^d * d! (permutation, signs) pairs."""
    return tuple(
        (perm, signs)
        for perm in itertools.permutations(range(d))
        for signs in itertools.product((1, -1), repeat=d)
    )


def apply_transform(t: SimilarityTransform, c: Configuration) -> Configuration:
    if t.dimension != c.dimension:
        raise DimensionMismatchError(
            f"transform dimension {t.dimension} != configuration dimension {c.dimension}"
        )
    return Configuration._trusted(frozenset(t(p) for p in c.points), c.dimension)


def _primitive_integer_points(points: Sequence[Point]) -> list[tuple[int, ...]]:
    """Translate to per-axis minimum 0 and rescale to coprime integers."""
    d = len(points[0])
    mins = [min(p[i] for p in points) for i in range(d)]
    shifted = [tuple(x - m for x, m in zip(p, mins)) for p in points]
    den = 1
    for p in shifted:
        for x in p:
            den = lcm(den, x.denominator)
    ints = [tuple(x.numerator * (den // x.denominator) for x in p) for p in shifted]
    g = 0
    for p in ints:
        for x in p:
            g = gcd(g, x)
    return [tuple(x // g for x in p) for p in ints]


def canonical_key(c: Configuration) -> tuple[tuple[int, ...], ...]:
    """Sorted integer point list of the canonical representative of ``c``."""
    n = len(c)
    d = c.dimension
    if n == 0:
        return ()
    if n == 1:
        return ((0,) * d,)
    base = _primitive_integer_points(c.sorted_points())
    best = None
    for perm, signs in signed_permutations(d):
        mapped = [tuple(s * p[j] for s, j in zip(signs, perm)) for p in base]
        mins = [min(q[i] for q in mapped) for i in range(d)]
        cand = sorted(tuple(x - m for x, m in zip(q, mins)) for q in mapped)
        if best is None or cand < best:
            best = cand
    return tuple(best)


def canonicalize(c: Configuration) -> Configuration:
    """Canonical representative of the l1-similarity class of ``c``.

    Translated so every axis has minimum 0, scaled to integer coordinates
    with overall gcd 1, then the lexicographically least sorted point list
    over all signed coordinate permutations.
    """
    key = canonical_key(c)
    frac = {}
    pts = []
    for p in key:
        pts.append(tuple(frac.setdefault(x, Fraction(x)) for x in p))
    config = Configuration._trusted(frozenset(pts), c.dimension)
    config._sorted = tuple(pts)
    return config


def are_similar(a: Configuration, b: Configuration) -> bool:
    if a.dimension != b.dimension:
        raise DimensionMismatchError(
            f"cannot compare configurations of dimension {a.dimension} and {b.dimension}"
        )
    if len(a) != len(b):
        return False
    return canonical_key(a) == canonical_key(b)


def is_axis_parallel(c: Configuration, metric: Metric = Metric.L1) -> bool:
    """Whether the largest distance of ``c`` is realised along a coordinate axis."""
    if len(c) < 2:
        raise ValueError("axis-parallel is undefined for fewer than two points")
    pts = c.sorted_points()
    lam = max(distance(p, q, metric) for p, q in itertools.combinations(pts, 2))
    present = c.points
    for x in pts:
        for i in range(c.dimension):
            y = x[:i] + (x[i] + lam,) + x[i + 1:]
            if y in present:
                return True
    return False
