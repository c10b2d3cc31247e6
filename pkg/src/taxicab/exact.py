"""Exact scalars: Bernoulli numbers, binomials and power sums.

Every scalar in the package is a :class:`fractions.Fraction`, which is
always stored in lowest terms with a positive denominator.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

Rational = Fraction

__all__ = ["Rational", "bernoulli", "binomial", "faulhaber_sum"]

# B_0, B_1, ... with B_1 = -1/2
_BERNOULLI: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def bernoulli(n: int) -> Fraction:
    """The n-th Bernoulli number, with the B_1 = -1/2 convention.

    Built from sum_{j=0}^{m} C(m+1, j) B_j = 0 and memoised; the table is
    extended under a lock so concurrent callers see a consistent prefix.
    """
    if n < 0:
        raise ValueError(f"bernoulli needs n >= 0, got {n}")
    if n < len(_BERNOULLI):
        return _BERNOULLI[n]
    with _BERNOULLI_LOCK:
        table = _BERNOULLI
        for m in range(len(table), n + 1):
            if m >= 3 and m % 2 == 1:
                table.append(Fraction(0))
                continue
            acc = sum((comb(m + 1, j) * table[j] for j in range(m)), Fraction(0))
            table.append(-acc / (m + 1))
        return table[n]


def faulhaber_sum(p: int, n: int) -> Fraction:
    """Closed-form value of 1^p + 2^p + ... + n^p.

    Uses n^{p+1}/(p+1) + n^p/2 + (1/(p+1)) sum_{i=1}^{p-1} C(p+1, i) B_{p+1-i} n^i.
    The lower-order sum starts at i = 1: an i = 0 term would add the
    constant B_{p+1}/(p+1), which is nonzero for odd p.
    """
    if p < 0 or n < 0:
        raise ValueError(f"faulhaber_sum needs p, n >= 0, got p={p}, n={n}")
    if n == 0:
        return Fraction(0)
    if p == 0:
        return Fraction(n)
    total = Fraction(n ** (p + 1), p + 1) + Fraction(n**p, 2)
    tail = sum(
        (comb(p + 1, i) * bernoulli(p + 1 - i) * n**i for i in range(1, p)),
        Fraction(0),
    )
    return total + tail / (p + 1)
