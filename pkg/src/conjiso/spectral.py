"""Laplacian spectrum of the transposition graph and spectral edge-boundaries.

The n! x n! Laplacian is never built. Each irreducible character chi_alpha is
an eigenvector with an explicit integer eigenvalue, and the indicator of a
union of classes expands in the characters, so the boundary of such a set is
a weighted sum over partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .characters import ClassFunction, character_table
from .combinatorics import (
    Partition,
    class_representative,
    class_size,
    cycle_type,
    partitions_of,
    swap_positions,
    transpositions,
)
from .sets import ConjClassSet


@dataclass(frozen=True)
class EigenvalueTable:
    n: int
    values: tuple[int, ...]

    def __getitem__(self, alpha: Sequence[int]) -> int:
        return self.values[partitions_of(self.n).index(alpha)]


@dataclass(frozen=True)
class WeightVector:
    """W_alpha = sum over sigma in A of chi_alpha(sigma); w_alpha = W_alpha / n!."""

    n: int
    values: tuple[int, ...]

    def rational(self) -> tuple[Fraction, ...]:
        nf = factorial(self.n)
        return tuple(Fraction(w, nf) for w in self.values)


def laplacian_eigenvalue(alpha: Sequence[int]) -> int:
    alpha = Partition(alpha)
    n = alpha.n
    twice = sum((a - i) * (a - i + 1) - i * (i - 1) for i, a in enumerate(alpha, start=1))
    half, odd = divmod(twice, 2)
    if odd:
        raise ArithmeticError(f"non-integral eigenvalue for {alpha}")
    return comb(n, 2) - half


@lru_cache(maxsize=None)
def eigenvalue_table(n: int) -> EigenvalueTable:
    return EigenvalueTable(n, tuple(laplacian_eigenvalue(a) for a in partitions_of(n)))


def two_row_eigenvalue(t: int, n: int) -> int:
    if not 0 <= 2 * t <= n:
        raise ValueError("need 0 <= t <= n/2")
    return t * n - t * t + t


def verify_eigenvector(alpha: Sequence[int], chi: ClassFunction | None = None) -> bool:
    """Check L chi = mu_alpha chi class by class, one representative each.

    ``chi`` defaults to the irreducible character of ``alpha``; passing a
    different class function lets callers run negative controls.
    """
    alpha = Partition(alpha)
    n = alpha.n
    if n > 9:
        raise ValueError("representative check limited to n <= 9")
    if chi is None:
        chi = character_table(n).row(alpha)
    mu = laplacian_eigenvalue(alpha)
    degree = comb(n, 2)
    for lam in partitions_of(n):
        sigma = class_representative(lam)
        neighbours = sum(chi[cycle_type(swap_positions(sigma, a, b))] for a, b in transpositions(n))
        if degree * chi[lam] - neighbours != mu * chi[lam]:
            return False
    return True


def weights(A: ConjClassSet) -> WeightVector:
    table = character_table(A.n)
    members = [(i, class_size(lam)) for i, lam in enumerate(partitions_of(A.n)) if A.mask >> i & 1]
    return WeightVector(
        A.n, tuple(sum(size * row[i] for i, size in members) for row in table.values)
    )


def spectral_boundary(A: ConjClassSet) -> int:
    """|boundary A| = sum_alpha mu_alpha W_alpha^2 / n!."""
    mu = eigenvalue_table(A.n).values
    total = sum(m * w * w for m, w in zip(mu, weights(A).values))
    q, r = divmod(total, factorial(A.n))
    if r:
        raise ArithmeticError(f"spectral sum {total} not divisible by {A.n}!")
    return q


def diaconis_lower_bound(a: int, n: int) -> Fraction:
    """Second-eigenvalue floor |A| (n! - |A|) / (n-1)! on the boundary."""
    nf = factorial(n)
    if not 0 <= a <= nf:
        raise ValueError("set size must lie in [0, n!]")
    return Fraction(a * (nf - a), factorial(n - 1))
