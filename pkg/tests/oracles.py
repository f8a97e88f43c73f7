"""Slow, obviously-correct reference implementations used only by the tests.

Nothing here imports the package's own algorithms.
"""

from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np
from sympy.combinatorics import Permutation


def cycle_lengths(sigma):
    """Sorted cycle lengths of a 1-based image tuple, via sympy."""
    perm = Permutation([x - 1 for x in sigma])
    return tuple(sorted((len(c) for c in perm.full_cyclic_form), reverse=True))


def partitions_by_compositions(n):
    """All partitions of n, from the 2^(n-1) compositions, descending."""
    if n == 0:
        return [()]
    out = set()
    for cuts in product([0, 1], repeat=n - 1):
        comp, cur = [], 1
        for c in cuts:
            if c:
                comp.append(cur)
                cur = 1
            else:
                cur += 1
        comp.append(cur)
        out.add(tuple(sorted(comp, reverse=True)))
    return sorted(out, reverse=True)


def symmetric_group(n):
    return list(permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def class_census(n):
    return Counter(cycle_lengths(s) for s in symmetric_group(n))


def boundary(S, n):
    """Edges of T_n leaving S, by listing every (element, transposition) pair."""
    S = set(map(tuple, S))
    total = 0
    for s in S:
        for a, b in combinations(range(n), 2):
            t = list(s)
            t[a], t[b] = t[b], t[a]
            total += tuple(t) not in S
    return total


def fixed_tabloids(shape, sigma):
    """Number of tabloids of the given shape fixed by sigma (1-based)."""
    n = len(sigma)

    def rec(rows, left):
        if not rows:
            return 1
        total = 0
        for block in combinations(sorted(left), rows[0]):
            bs = set(block)
            if {sigma[x - 1] for x in bs} == bs:
                total += rec(rows[1:], left - bs)
        return total

    return rec(list(shape), set(range(1, n + 1)))


def fixed_points(sigma):
    return sum(1 for i, x in enumerate(sigma, start=1) if x == i)


def dominance_violations(parts, mu):
    """Count pairs (a, b) with b dominating a but mu[b] > mu[a].

    Dominance is tested on padded prefix sums with numpy so that n = 30
    (5604 partitions) stays fast.
    """
    n = sum(parts[0])
    mu = np.asarray(mu, dtype=np.int64)
    prefix = np.full((len(parts), n), n, dtype=np.int16)
    for r, lam in enumerate(parts):
        prefix[r, : len(lam)] = np.cumsum(lam)
    bad = 0
    for a in range(len(parts)):
        dominating = (prefix >= prefix[a]).all(axis=1)
        bad += int((mu[dominating] > mu[a]).sum())
    return bad
