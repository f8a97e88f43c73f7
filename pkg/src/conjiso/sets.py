"""Subsets of S_n and three ways of counting their edge-boundary in T_n.

``ConjClassSet`` is a union of conjugacy classes (bit i = class i of
:func:`partitions_of`). ``ExplicitSet`` is an arbitrary set of permutations,
stored as sorted lexicographic ranks. Boundaries of explicit sets are counted
by brute force over the transposition neighbour table; unions of classes can
also use the class interaction matrix or the spectral formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial
from typing import Iterable, Sequence

import numpy as np

from .combinatorics import (
    Partition,
    check_perm,
    class_representative,
    class_size,
    cycle_type,
    partitions_of,
    perm_rank_lex,
    perm_unrank_lex,
    swap_positions,
    transpositions,
)

MAX_MATRIX_N = 14
MAX_EXPLICIT_N = 8


@dataclass(frozen=True)
class ConjClassSet:
    n: int
    mask: int
    size: int = field(init=False, compare=False)

    def __post_init__(self):
        p = len(partitions_of(self.n))
        if not 0 <= self.mask < 1 << p:
            raise ValueError(f"mask out of range for p({self.n}) = {p}")
        size = sum(class_size(lam) for i, lam in enumerate(partitions_of(self.n)) if self.mask >> i & 1)
        object.__setattr__(self, "size", size)

    @classmethod
    def from_classes(cls, n: int, classes: Iterable) -> "ConjClassSet":
        table = partitions_of(n)
        mask = 0
        for lam in classes:
            if isinstance(lam, str):
                lam = Partition.parse(lam)
            mask |= 1 << table.index(Partition(lam))
        return cls(n, mask)

    @classmethod
    def parse(cls, n: int, text: str) -> "ConjClassSet":
        """Parse ``"2+1+1, 3+1"``; an empty string is the empty set."""
        items = [t for t in "".join(text.split()).split(",") if t]
        return cls.from_classes(n, [Partition.parse(t) for t in items])

    @classmethod
    def everything(cls, n: int) -> "ConjClassSet":
        return cls(n, (1 << len(partitions_of(n))) - 1)

    @classmethod
    def empty(cls, n: int) -> "ConjClassSet":
        return cls(n, 0)

    def complement(self) -> "ConjClassSet":
        return ConjClassSet(self.n, self.mask ^ ((1 << len(partitions_of(self.n))) - 1))

    def classes(self) -> list[Partition]:
        return [lam for i, lam in enumerate(partitions_of(self.n)) if self.mask >> i & 1]

    def __contains__(self, lam) -> bool:
        return bool(self.mask >> partitions_of(self.n).index(Partition(lam)) & 1)

    @property
    def measure(self) -> Fraction:
        return Fraction(self.size, factorial(self.n))

    def membership(self) -> tuple[int, ...]:
        """0/1 membership vector in canonical partition order."""
        return tuple(self.mask >> i & 1 for i in range(len(partitions_of(self.n))))

    def to_json(self) -> list[str]:
        return [str(lam) for lam in self.classes()]


@dataclass(frozen=True)
class ClassInteractionMatrix:
    """E[l][m] = number of T_n edges between classes l and m (l != m).

    The diagonal holds within-class edge counts, which are zero because a
    transposition always changes parity.
    """

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, key) -> int:
        """Index by class positions or by the partitions themselves."""
        table = partitions_of(self.n)
        i, j = (x if isinstance(x, (int, np.integer)) else table.index(x) for x in key)
        return self.entries[i][j]

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)


@lru_cache(maxsize=None)
def interaction_matrix(n: int) -> ClassInteractionMatrix:
    if not 1 <= n <= MAX_MATRIX_N:
        raise ValueError(f"interaction matrix supported for 1 <= n <= {MAX_MATRIX_N}")
    table = partitions_of(n)
    p = len(table)
    directed = [[0] * p for _ in range(p)]
    for i, lam in enumerate(table):
        sigma = class_representative(lam)
        size = class_size(lam)
        for a, b in transpositions(n):
            directed[i][table.index(cycle_type(swap_positions(sigma, a, b)))] += size
    for i in range(p):
        for j in range(p):
            if directed[i][j] != directed[j][i]:
                raise ArithmeticError(f"asymmetric edge count between classes {i}, {j}")
    entries = [row[:] for row in directed]
    for i in range(p):
        entries[i][i] = directed[i][i] // 2
        off = sum(entries[i][j] for j in range(p) if j != i)
        if off + 2 * entries[i][i] != class_size(table[i]) * comb(n, 2):
            raise ArithmeticError(f"row-sum check failed for class {table[i]}")
    return ClassInteractionMatrix(n, tuple(tuple(r) for r in entries))


def boundary_via_classes(A: ConjClassSet, E: ClassInteractionMatrix | None = None) -> int:
    if E is None:
        E = interaction_matrix(A.n)
    elif E.n != A.n:
        raise ValueError("interaction matrix is for a different n")
    p = len(E.entries)
    inside = [i for i in range(p) if A.mask >> i & 1]
    outside = [j for j in range(p) if not A.mask >> j & 1]
    return sum(E.entries[i][j] for i in inside for j in outside)


# --- explicit permutation sets -------------------------------------------


def _check_explicit_n(n: int):
    if not 1 <= n <= MAX_EXPLICIT_N:
        raise ValueError(f"explicit sets supported for 1 <= n <= {MAX_EXPLICIT_N}")


@lru_cache(maxsize=None)
def all_perms(n: int) -> np.ndarray:
    """Every permutation of [n] (1-based rows), in lexicographic order."""
    _check_explicit_n(n)
    return np.array(list(permutations(range(1, n + 1))), dtype=np.int8).reshape(-1, n)


def lex_ranks(perms: np.ndarray) -> np.ndarray:
    """Vectorised :func:`perm_rank_lex` over the rows of ``perms``."""
    perms = np.asarray(perms)
    n = perms.shape[1]
    ranks = np.zeros(len(perms), dtype=np.int64)
    for pos in range(n - 1):
        smaller = (perms[:, pos + 1:] < perms[:, pos:pos + 1]).sum(axis=1)
        ranks += smaller * factorial(n - 1 - pos)
    return ranks


@lru_cache(maxsize=None)
def neighbour_table(n: int) -> np.ndarray:
    """nbr[r, t] = lex rank of perm r composed with the t-th transposition."""
    perms = all_perms(n)
    cols = []
    for a, b in transpositions(n):
        swapped = perms.copy()
        swapped[:, [a - 1, b - 1]] = swapped[:, [b - 1, a - 1]]
        cols.append(lex_ranks(swapped))
    if not cols:
        return np.zeros((len(perms), 0), dtype=np.int64)
    return np.stack(cols, axis=1)


@lru_cache(maxsize=None)
def class_index_by_rank(n: int) -> np.ndarray:
    table = partitions_of(n)
    return np.array([table.index(cycle_type(tuple(p))) for p in all_perms(n).tolist()], dtype=np.int64)


@dataclass(frozen=True, eq=False)
class ExplicitSet:
    n: int
    ranks: np.ndarray

    @classmethod
    def from_ranks(cls, n: int, ranks: Iterable[int]) -> "ExplicitSet":
        _check_explicit_n(n)
        arr = np.unique(np.asarray(list(ranks), dtype=np.int64))
        if arr.size and (arr[0] < 0 or arr[-1] >= factorial(n)):
            raise ValueError("rank out of range")
        return cls(n, arr)

    @classmethod
    def from_perms(cls, perms: Iterable[Sequence[int]]) -> "ExplicitSet":
        perms = [check_perm(s) for s in perms]
        if not perms:
            raise ValueError("cannot infer n from an empty list; use from_ranks")
        n = len(perms[0])
        return cls.from_ranks(n, (perm_rank_lex(s) for s in perms))

    @classmethod
    def from_mask(cls, n: int, mask: np.ndarray) -> "ExplicitSet":
        return cls(n, np.flatnonzero(mask).astype(np.int64))

    @property
    def size(self) -> int:
        return int(self.ranks.size)

    def __len__(self) -> int:
        return self.size

    def mask(self) -> np.ndarray:
        m = np.zeros(factorial(self.n), dtype=bool)
        m[self.ranks] = True
        return m

    def __contains__(self, sigma) -> bool:
        r = perm_rank_lex(sigma)
        i = np.searchsorted(self.ranks, r)
        return bool(i < self.ranks.size and self.ranks[i] == r)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExplicitSet)
            and self.n == other.n
            and np.array_equal(self.ranks, other.ranks)
        )

    def __hash__(self):
        return hash((self.n, self.ranks.tobytes()))

    def perms(self) -> list:
        return [perm_unrank_lex(self.n, int(r)) for r in self.ranks]

    def to_json(self) -> list[int]:
        return [int(r) for r in self.ranks]


def boundary_bruteforce(S: ExplicitSet) -> int:
    """Count (sigma in S, transposition) pairs whose product leaves S.

    Every boundary edge has exactly one endpoint in S, so no deduplication is
    needed.
    """
    _check_explicit_n(S.n)
    if not S.size:
        return 0
    inside = S.mask()
    return int((~inside[neighbour_table(S.n)[S.ranks]]).sum())


def explicit_union(A: ConjClassSet) -> ExplicitSet:
    """The union of classes as an explicit set of permutations."""
    _check_explicit_n(A.n)
    member = np.array([A.mask >> i & 1 for i in range(len(partitions_of(A.n)))], dtype=bool)
    return ExplicitSet.from_mask(A.n, member[class_index_by_rank(A.n)])


def make_A_s(s: int, n: int) -> ConjClassSet:
    """Classes of permutations with at least ``s`` fixed points."""
    if not 0 <= s <= n:
        raise ValueError("need 0 <= s <= n")
    return ConjClassSet.from_classes(n, [lam for lam in partitions_of(n) if lam.multiplicity(1) >= s])


def make_block_fixing(n: int, k: int) -> ExplicitSet:
    """Permutations fixing at least one block {(i-1)k+1, ..., ik} pointwise."""
    if k <= 0 or n % k:
        raise ValueError(f"block size {k} must divide n = {n}")
    perms = all_perms(n)
    hit = np.zeros(len(perms), dtype=bool)
    for start in range(0, n, k):
        block = np.arange(start + 1, start + k + 1, dtype=perms.dtype)
        hit |= (perms[:, start:start + k] == block).all(axis=1)
    return ExplicitSet.from_mask(n, hit)


def lex_segment(n: int, k: int) -> ExplicitSet:
    if not 0 <= k <= factorial(n):
        raise ValueError("segment length must lie in [0, n!]")
    return ExplicitSet(n, np.arange(k, dtype=np.int64))


def first_column_set(n: int, c: int) -> ExplicitSet:
    """{sigma : sigma(1) <= c}, which is the lex segment of size c (n-1)!."""
    return lex_segment(n, c * factorial(n - 1))


def lex_segment_boundary(n: int, k: int) -> int:
    """Boundary of the first ``k`` permutations in lexicographic order."""
    _check_explicit_n(n)
    if not 0 <= k <= factorial(n):
        raise ValueError("segment length must lie in [0, n!]")
    return int((neighbour_table(n)[:k] >= k).sum())


@lru_cache(maxsize=None)
def lex_boundary_profile(n: int) -> np.ndarray:
    """profile[k] = boundary of the lex segment of size k, for k = 0..n!.

    Appending rank r changes the boundary by deg - 2 * (neighbours below r).
    """
    nbr = neighbour_table(n)
    below = (nbr < np.arange(len(nbr))[:, None]).sum(axis=1)
    delta = comb(n, 2) - 2 * below
    return np.concatenate([[0], np.cumsum(delta)])


def appendix_t(n: int, k: int) -> int:
    """Largest t in [0, n-1] with k <= (n-t)!.

    For k >= 2 this is the unique t with (n-t-1)! < k <= (n-t)!; k = 1 falls
    in no such bracket and is assigned t = n - 1.
    """
    if not 1 <= k <= factorial(n):
        raise ValueError("need 1 <= k <= n!")
    t = 0
    while t + 1 <= n - 1 and k <= factorial(n - t - 1):
        t += 1
    return t


def appendix_bound(n: int, k: int) -> Fraction:
    """Upper bound (t + 3/2)(n - 1) k on a lex segment of size k."""
    t = appendix_t(n, k)
    return Fraction(2 * t + 3, 2) * (n - 1) * k
