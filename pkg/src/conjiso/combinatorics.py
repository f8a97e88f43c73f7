"""Partitions, conjugacy-class arithmetic and permutation ranking for S_n.

Partitions double as cycle types: the conjugacy classes of S_n are indexed by
the partitions of n. Every partition table is listed in descending
lexicographic order, so ``(n,)`` sits at position 0 and ``(1,) * n`` last.

Permutations are 1-based image tuples ``(sigma(1), ..., sigma(n))``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator, Sequence

MAX_PARTITION_N = 40

PermWord = tuple[int, ...]


class Partition(tuple):
    """A non-increasing tuple of positive integers.

    >>> Partition([2, 3, 2])
    Partition(3, 2, 2)
    >>> Partition([3, 2, 2]).n
    7
    """

    __slots__ = ()

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] <= 0:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def multiplicity(self, i: int) -> int:
        """Number of parts equal to ``i``."""
        return self.count(i)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def __repr__(self) -> str:
        return f"Partition{tuple(self)!r}".replace(",)", ")")

    def __str__(self) -> str:
        return "+".join(map(str, self)) if self else "0"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3+1"`` (whitespace ignored) into ``Partition(3, 1)``."""
        text = "".join(text.split())
        if not text:
            raise ValueError("empty cycle-type string")
        try:
            parts = [int(tok) for tok in text.split("+")]
        except ValueError:
            raise ValueError(f"malformed cycle-type string: {text!r}") from None
        if any(p <= 0 for p in parts):
            raise ValueError(f"malformed cycle-type string: {text!r}")
        return cls(parts)


def _gen_partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _gen_partitions(n - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class PartitionTable:
    """All partitions of ``n`` in descending lexicographic order."""

    n: int
    partitions: tuple[Partition, ...]
    _index: dict = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.partitions)

    def __iter__(self):
        return iter(self.partitions)

    def __getitem__(self, i: int) -> Partition:
        return self.partitions[i]

    def index(self, lam: Sequence[int]) -> int:
        try:
            return self._index[tuple(lam)]
        except KeyError:
            raise ValueError(f"{tuple(lam)} is not a partition of {self.n}") from None


@lru_cache(maxsize=None)
def partitions_of(n: int) -> PartitionTable:
    if not 0 <= n <= MAX_PARTITION_N:
        raise ValueError(f"n must lie in [0, {MAX_PARTITION_N}], got {n}")
    parts = tuple(Partition(p) for p in _gen_partitions(n, n))
    return PartitionTable(n, parts, {tuple(p): i for i, p in enumerate(parts)})


def partition_count(n: int) -> int:
    """p(n), with p(0) = 1."""
    return len(partitions_of(n))


def dominates(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    """True iff ``beta`` dominates ``alpha`` (reflexive: ``dominates(a, a)``)."""
    if sum(beta) != sum(alpha):
        raise ValueError("dominance compares partitions of the same n")
    sb = sa = 0
    for r in range(max(len(beta), len(alpha))):
        sb += beta[r] if r < len(beta) else 0
        sa += alpha[r] if r < len(alpha) else 0
        if sb < sa:
            return False
    return True


def centralizer_order(lam: Sequence[int]) -> int:
    return prod(i**m * factorial(m) for i, m in Counter(lam).items())


def class_size(lam: Sequence[int]) -> int:
    """Number of permutations of S_n with cycle type ``lam``."""
    return factorial(sum(lam)) // centralizer_order(lam)


def derangement_count(m: int) -> int:
    """d_m = m! * sum_{i<=m} (-1)^i / i!, evaluated in integers."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return sum((-1) ** i * (factorial(m) // factorial(i)) for i in range(m + 1))


def cycle_count_census(n: int, i: int, j: int) -> int:
    """Number of permutations of [n] with exactly ``j`` cycles of length ``i``.

    Evaluated from the alternating-series closed form over exact rationals;
    a non-integral value raises ``ArithmeticError``.
    """
    if not 1 <= i <= n or not 0 <= j <= n // i:
        raise ValueError(f"need 1 <= i <= n and 0 <= j <= n // i, got {(n, i, j)}")
    series = sum(
        Fraction((-1) ** l, i**l * factorial(l)) for l in range(n // i - j + 1)
    )
    value = Fraction(factorial(n), i**j * factorial(j)) * series
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"census D({n},{i},{j}) evaluated to {value}")
    return int(value)


def check_perm(sigma: Sequence[int]) -> PermWord:
    sigma = tuple(int(x) for x in sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"not a permutation of [n]: {sigma}")
    return sigma


def perm_rank_lex(sigma: Sequence[int]) -> int:
    """Position of ``sigma`` in the lexicographic order of S_n (identity is 0)."""
    sigma = check_perm(sigma)
    n = len(sigma)
    rank = 0
    for pos, v in enumerate(sigma):
        smaller_later = sum(1 for w in sigma[pos + 1:] if w < v)
        rank += smaller_later * factorial(n - 1 - pos)
    return rank


def perm_unrank_lex(n: int, r: int) -> PermWord:
    if not 0 <= r < factorial(n):
        raise ValueError(f"rank {r} out of range for S_{n}")
    pool = list(range(1, n + 1))
    out = []
    for pos in range(n - 1, -1, -1):
        d, r = divmod(r, factorial(pos))
        out.append(pool.pop(d))
    return tuple(out)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> PermWord:
    """(sigma . tau)(x) = sigma(tau(x))."""
    return tuple(sigma[t - 1] for t in tau)


def swap_positions(sigma: Sequence[int], a: int, b: int) -> PermWord:
    """sigma composed with the transposition (a b); a, b are 1-based."""
    s = list(sigma)
    s[a - 1], s[b - 1] = s[b - 1], s[a - 1]
    return tuple(s)


def cycle_type(sigma: Sequence[int]) -> Partition:
    n = len(sigma)
    seen = [False] * (n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = sigma[x - 1]
            length += 1
        lengths.append(length)
    return Partition(lengths)


def cycle_count(sigma: Sequence[int], i: int) -> int:
    """C_i(sigma): the number of cycles of length ``i``."""
    return cycle_type(sigma).multiplicity(i)


def class_representative(lam: Sequence[int]) -> PermWord:
    """A permutation of cycle type ``lam`` built from consecutive cycles."""
    sigma = []
    start = 1
    for part in lam:
        sigma.extend(range(start + 1, start + part))
        sigma.append(start)
        start += part
    return tuple(sigma)


def transpositions(n: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]


def multinomial(parts: Sequence[int]) -> int:
    out, total = 1, 0
    for k in parts:
        total += k
        out *= comb(total, k)
    return out
