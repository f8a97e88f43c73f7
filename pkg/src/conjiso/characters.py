"""Permutation characters, the determinantal formula and irreducible characters.

All values are exact Python integers. Class functions are stored as one value
per conjugacy class, in the order of :func:`partitions_of`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Sequence

from .combinatorics import (
    Partition,
    check_perm,
    cycle_type,
    dominates,
    multinomial,
    partitions_of,
)

MAX_XI_N = 30
MAX_TABLE_N = 14
MAX_DETERMINANTAL_U = 6


@dataclass(frozen=True)
class ClassFunction:
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(partitions_of(self.n)):
            raise ValueError("class function needs one value per partition of n")

    def __getitem__(self, lam: Sequence[int]) -> int:
        return self.values[partitions_of(self.n).index(lam)]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class DeterminantalExpansion:
    """chi_alpha = sum over beta of terms[beta] * xi_beta."""

    alpha: Partition
    terms: dict

    def abs_coefficient_sum(self) -> int:
        return sum(abs(c) for c in self.terms.values())


def _same_n(beta: Sequence[int], lam: Sequence[int]) -> int:
    n = sum(beta)
    if n != sum(lam):
        raise ValueError(f"{tuple(beta)} and {tuple(lam)} are partitions of different n")
    return n


def _sub_multisets(lengths, rem, target, idx=0):
    """Yield count vectors a <= rem (over ``lengths``) with sum(l * a_l) == target."""
    if target == 0:
        yield (0,) * (len(lengths) - idx)
        return
    if idx == len(lengths):
        return
    length = lengths[idx]
    for a in range(min(rem[idx], target // length) + 1):
        for tail in _sub_multisets(lengths, rem, target - a * length, idx + 1):
            yield (a,) + tail


@lru_cache(maxsize=None)
def _xi(beta: tuple[int, ...], lam: tuple[int, ...]) -> int:
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    lengths = tuple(sorted(mult))

    @lru_cache(maxsize=None)
    def fill(row: int, rem: tuple[int, ...]) -> int:
        if row == len(beta):
            return 1 if not any(rem) else 0
        total = 0
        for a in _sub_multisets(lengths, rem, beta[row]):
            ways = 1
            for r, k in zip(rem, a):
                ways *= comb(r, k)
            total += ways * fill(row + 1, tuple(r - k for r, k in zip(rem, a)))
        return total

    return fill(0, tuple(mult[l] for l in lengths))


def xi_on_class(beta: Sequence[int], lam: Sequence[int]) -> int:
    """Number of ``beta``-tabloids fixed by a permutation of cycle type ``lam``.

    Cycles of ``lam`` are distributed over the rows of ``beta``; each row must
    receive whole cycles whose lengths add up to the row length.
    """
    n = _same_n(beta, lam)
    if n > MAX_XI_N:
        raise ValueError(f"n={n} exceeds {MAX_XI_N}")
    return _xi(tuple(sorted(beta, reverse=True)), tuple(sorted(lam, reverse=True)))


def xi_two_row(s: int, lam: Sequence[int]) -> int:
    """Number of ``s``-subsets of [n] fixed by a permutation of cycle type ``lam``."""
    n = sum(lam)
    s = min(s, n - s)
    if s < 0:
        raise ValueError("need 0 <= s <= n")
    # coefficient of x^s in prod (1 + x^l) over the cycles
    coeffs = [1] + [0] * s
    for part in lam:
        for d in range(s, part - 1, -1):
            coeffs[d] += coeffs[d - part]
    return coeffs[s]


def xi_bruteforce(beta: Sequence[int], sigma: Sequence[int]) -> int:
    """Count fixed tabloids of shape ``beta`` by listing every tabloid."""
    sigma = check_perm(sigma)
    n = len(sigma)
    if sum(beta) != n:
        raise ValueError("shape and permutation have different n")
    if n > 7 or multinomial(beta) > 10**6:
        raise ValueError("instance too large for tabloid enumeration")

    def count(rows, remaining):
        if not rows:
            return 1
        total = 0
        for block in combinations(sorted(remaining), rows[0]):
            if all(sigma[x - 1] in block for x in block):
                total += count(rows[1:], remaining - set(block))
        return total

    return count(list(beta), set(range(1, n + 1)))


def determinantal_expansion(alpha: Sequence[int]) -> DeterminantalExpansion:
    """Collect chi_alpha = sum_pi sgn(pi) xi_{alpha - id + pi} by shape.

    Only pi permuting the first u + 1 rows can contribute, u = n - alpha_1.
    """
    alpha = Partition(alpha)
    n = alpha.n
    u = n - (alpha[0] if alpha else 0)
    if u > MAX_DETERMINANTAL_U:
        raise ValueError(f"u = n - alpha_1 = {u} exceeds {MAX_DETERMINANTAL_U}")
    rows = u + 1
    padded = list(alpha) + [0] * (rows - len(alpha))
    terms: dict[Partition, int] = {}
    for pi in permutations(range(1, rows + 1)):
        seq = [padded[i] - (i + 1) + pi[i] for i in range(rows)]
        if min(seq) < 0:
            continue
        beta = Partition([x for x in seq if x])
        terms[beta] = terms.get(beta, 0) + _perm_sign(pi)
    terms = {b: c for b, c in terms.items() if c}
    assert all(dominates(b, alpha) for b in terms)
    return DeterminantalExpansion(alpha, terms)


def _perm_sign(pi: Sequence[int]) -> int:
    parity = sum(part - 1 for part in cycle_type(pi))
    return -1 if parity % 2 else 1


def chi_via_determinantal(alpha: Sequence[int], lam: Sequence[int]) -> int:
    _same_n(alpha, lam)
    expansion = determinantal_expansion(alpha)
    return sum(c * xi_on_class(beta, lam) for beta, c in expansion.terms.items())


def _beta_set(shape: tuple[int, ...]) -> tuple[int, ...]:
    l = len(shape)
    return tuple(shape[i] + l - 1 - i for i in range(l))


def _shape_from_beta(beta: list[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    l = len(beta)
    return tuple(p for p in (beta[i] - (l - 1 - i) for i in range(l)) if p)


@lru_cache(maxsize=None)
def _mn(shape: tuple[int, ...], rest: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama: strip rim hooks of length rest[0], rest[1], ..."""
    if not rest:
        return 1 if not shape else 0
    r, tail = rest[0], rest[1:]
    beads = _beta_set(shape)
    occupied = set(beads)
    total = 0
    for b in beads:
        if b - r < 0 or (b - r) in occupied:
            continue
        # height of the rim hook = beads jumped over
        height = sum(1 for c in beads if b - r < c < b)
        moved = [c for c in beads if c != b] + [b - r]
        total += (-1) ** height * _mn(_shape_from_beta(moved), tail)
    return total


@dataclass(frozen=True)
class CharacterTable:
    """Rows are irreducible characters, columns are classes; both in table order."""

    n: int
    values: tuple[tuple[int, ...], ...]

    def row(self, alpha: Sequence[int]) -> ClassFunction:
        return ClassFunction(self.n, self.values[partitions_of(self.n).index(alpha)])

    def __getitem__(self, key) -> int:
        alpha, lam = key
        table = partitions_of(self.n)
        return self.values[table.index(alpha)][table.index(lam)]

    def rows(self) -> list[ClassFunction]:
        return [ClassFunction(self.n, r) for r in self.values]


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    if not 0 <= n <= MAX_TABLE_N:
        raise ValueError(f"full character table supported for n <= {MAX_TABLE_N}")
    parts = partitions_of(n).partitions
    return CharacterTable(
        n, tuple(tuple(_mn(tuple(a), tuple(lam)) for lam in parts) for a in parts)
    )


def dimension(alpha: Sequence[int]) -> int:
    """Degree of the irreducible character, by the hook length formula."""
    alpha = Partition(alpha)
    conj = [sum(1 for a in alpha if a > j) for j in range(alpha[0] if alpha else 0)]
    hooks = 1
    for i, a in enumerate(alpha):
        for j in range(a):
            hooks *= a - j + conj[j] - i - 1
    return factorial(alpha.n) // hooks
