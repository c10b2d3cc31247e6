"""Formula-based counts of |Lambda_d(k)|.

Two independent routes: the slice recursion in the dimension, and the
polynomial in (k + 1) whose coefficients come from Faulhaber sums.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import bernoulli, binomial

__all__ = [
    "CountPolynomial",
    "ConsistencyError",
    "lambda_size_recursive",
    "lambda_coefficients",
    "lambda_size_polynomial",
]


class ConsistencyError(ArithmeticError):
    """An exact identity that must hold came out false (an internal bug)."""


@dataclass(frozen=True)
class CountPolynomial:
    """|Lambda_d(k)| = sum_i coefficients[i] * (k+1)^(d - 2i)."""

    dimension: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        d = self.dimension
        if len(self.coefficients) != (d + 1) // 2:
            raise ConsistencyError(
                f"d={d} needs {(d + 1) // 2} coefficients, got {len(self.coefficients)}"
            )
        if self.coefficients[0] != Fraction(2 ** (d - 1), factorial(d)):
            raise ConsistencyError(f"leading coefficient wrong for d={d}")
        if d >= 3 and self.coefficients[1] != Fraction(2 ** (d - 3), 3 * factorial(d - 3)):
            raise ConsistencyError(f"second coefficient wrong for d={d}")

    def powers(self) -> tuple[int, ...]:
        return tuple(self.dimension - 2 * i for i in range(len(self.coefficients)))

    def evaluate(self, k: int) -> Fraction:
        n = k + 1
        return sum(
            (a * n**e for a, e in zip(self.coefficients, self.powers())), Fraction(0)
        )


@lru_cache(maxsize=None)
def lambda_size_recursive(d: int, k: int) -> int:
    """|Lambda_d(k)| from |Lambda_{d+1}(k)| = |Lambda_d(k)| + 2 sum_{j<k} |Lambda_d(j)|."""
    if d < 1 or k < 0:
        raise ValueError(f"need d >= 1 and k >= 0, got d={d}, k={k}")
    if d == 1:
        return k + 1
    return lambda_size_recursive(d - 1, k) + 2 * sum(
        lambda_size_recursive(d - 1, j) for j in range(k)
    )


@lru_cache(maxsize=None)
def _coefficients(d: int) -> tuple[Fraction, ...]:
    if d == 1:
        return (Fraction(1),)
    prev = _coefficients(d - 1)
    coeffs = []
    for i in range((d + 1) // 2):
        acc = Fraction(0)
        for ell in range(i + 1):
            if ell >= len(prev):
                continue
            m = d - 2 * ell
            acc += prev[ell] / m * binomial(m, 2 * (i - ell)) * bernoulli(2 * (i - ell))
        coeffs.append(2 * acc)
    return tuple(coeffs)


def lambda_coefficients(d: int) -> CountPolynomial:
    """Coefficients a_{d,0}, ..., a_{d,ceil(d/2)-1} of |Lambda_d(k)| in powers of k+1."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    return CountPolynomial(d, _coefficients(d))


def lambda_size_polynomial(d: int, k: int) -> int:
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    value = lambda_coefficients(d).evaluate(k)
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(f"|Lambda_{d}({k})| evaluated to non-count {value}")
    return int(value)
