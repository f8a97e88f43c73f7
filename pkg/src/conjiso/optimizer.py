"""Minimum edge-boundary over unions of conjugacy classes, and two conjecture
checkers.

Open conjectures are reported, never asserted: their checks carry
``asserted=False``. Only the proved second-eigenvalue floor is asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .combinatorics import class_size, partitions_of
from .report import VerificationReport
from .sets import (
    ConjClassSet,
    boundary_via_classes,
    interaction_matrix,
    lex_boundary_profile,
    make_A_s,
    neighbour_table,
)
from .spectral import diaconis_lower_bound
from .sweep import GraySweep, lex_key

MAX_XI_N = 8
MAX_BEN_EFRAIM_N = 4


@dataclass(frozen=True)
class XiResult:
    n: int
    k: int
    min_boundary: int | None
    witness: ConjClassSet | None
    achievable: bool

    def to_json(self) -> dict:
        return {
            "n": str(self.n),
            "k": str(self.k),
            "achievable": self.achievable,
            "min_boundary": None if self.min_boundary is None else str(self.min_boundary),
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def _check_n(n: int):
    if not 1 <= n <= MAX_XI_N:
        raise ValueError(f"exhaustive class sweep supported for 1 <= n <= {MAX_XI_N}")


@lru_cache(maxsize=None)
def xi_profile(n: int) -> dict[int, tuple[int, int]]:
    """Map each achievable size k to (minimum boundary, witness mask).

    Among minimisers the witness has the lexicographically least membership
    vector in canonical class order.
    """
    _check_n(n)
    p = len(partitions_of(n))
    sizes = np.array([class_size(lam) for lam in partitions_of(n)], dtype=np.int64)
    best: dict[int, tuple[int, int, int]] = {}
    for masks, size, bound in GraySweep(interaction_matrix(n).as_array(), sizes).blocks():
        key = lex_key(masks, p)
        order = np.lexsort((key, bound, size))
        size_s = size[order]
        firsts = np.flatnonzero(np.r_[True, size_s[1:] != size_s[:-1]])
        for j in order[firsts]:
            k, cand = int(size[j]), (int(bound[j]), int(key[j]), int(masks[j]))
            if k not in best or cand[:2] < best[k][:2]:
                best[k] = cand
    return {k: (b, m) for k, (b, _, m) in sorted(best.items())}


def xi_profile_naive(n: int) -> dict[int, tuple[int, int]]:
    """Same table as :func:`xi_profile`, by plain enumeration of class subsets."""
    p = len(partitions_of(n))
    E = interaction_matrix(n)
    best: dict[int, tuple[int, tuple, int]] = {}
    for mask in range(1 << p):
        A = ConjClassSet(n, mask)
        cand = (boundary_via_classes(A, E), A.membership(), mask)
        if A.size not in best or cand[:2] < best[A.size][:2]:
            best[A.size] = cand
    return {k: (b, m) for k, (b, _, m) in sorted(best.items())}


def xi_min(n: int, k: int) -> XiResult:
    _check_n(n)
    if not 0 <= k <= factorial(n):
        raise ValueError("k must lie in [0, n!]")
    hit = xi_profile(n).get(k)
    if hit is None:
        return XiResult(n, k, None, None, False)
    return XiResult(n, k, hit[0], ConjClassSet(n, hit[1]), True)


def conclusion_conjecture_check(n: int) -> VerificationReport:
    """Compare Xi_n(k) with min(|dA_{s-1}|, |dA_s|) for |A_s| <= k <= |A_{s-1}|.

    Every bracket s (there can be two at shared endpoints) is evaluated. The
    conjecture entry fails only if no admissible s satisfies it. The
    second-eigenvalue floor is asserted for every k.
    """
    _check_n(n)
    report = VerificationReport("conclusion_conjecture")
    A = [make_A_s(j, n) for j in range(n + 1)]
    sizes = [a.size for a in A]
    bounds = [boundary_via_classes(a) for a in A]
    profile = xi_profile(n)
    nf = factorial(n)
    skipped = []
    for k in range(1, nf + 1):
        if k not in profile:
            skipped.append(k)
            continue
        xi, mask = profile[k]
        witness = ConjClassSet(n, mask)
        floor = diaconis_lower_bound(k, n)
        report.add("floor", {"n": n, "k": k}, xi, floor, xi >= floor, witness)
        brackets = [s for s in range(1, n + 1) if sizes[s] <= k <= sizes[s - 1]]
        per_s = {s: min(bounds[s - 1], bounds[s]) for s in brackets}
        ok = [xi >= v for v in per_s.values()]
        report.add(
            "conclusion_conjecture",
            {"n": n, "k": k, "s": brackets},
            xi,
            per_s,
            any(ok),
            {"witness": witness, "ambiguous": len(brackets) > 1 and not all(ok)},
            asserted=False,
        )
    report.data.update({"n": n, "unachievable": len(skipped), "A_s_sizes": sizes, "A_s_boundaries": bounds})
    return report


def ben_efraim_profile(n: int) -> np.ndarray:
    """profile[k] = minimum boundary over all k-subsets of S_n (every subset)."""
    if not 1 <= n <= MAX_BEN_EFRAIM_N:
        raise ValueError(f"exhaustive subset sweep supported for n <= {MAX_BEN_EFRAIM_N}")
    nf = factorial(n)
    nbr = neighbour_table(n)
    adj = np.zeros((nf, nf), dtype=np.int64)
    for r in range(nf):
        adj[r, nbr[r]] = 1
    best = np.full(nf + 1, np.iinfo(np.int64).max, dtype=np.int64)
    for _, size, bound in GraySweep(adj, np.ones(nf, dtype=np.int64)).blocks():
        np.minimum.at(best, size, bound)
    return best


def ben_efraim_check(n: int) -> VerificationReport:
    """Every subset against the lexicographic initial segment of equal size.

    The conjecture entries are report-only; the floor (with equality at
    multiples of (n-1)!) is asserted.
    """
    report = VerificationReport("ben_efraim")
    best = ben_efraim_profile(n)
    lex = lex_boundary_profile(n)
    nf, nf1 = factorial(n), factorial(n - 1)
    for k in range(nf + 1):
        floor = diaconis_lower_bound(k, n)
        report.add("floor", {"n": n, "k": k}, int(best[k]), floor, best[k] >= floor)
        if k % nf1 == 0:
            report.add("floor_equality", {"n": n, "k": k}, int(best[k]), floor, best[k] == floor)
        report.add(
            "ben_efraim", {"n": n, "k": k}, int(best[k]), int(lex[k]), best[k] >= lex[k], asserted=False
        )
    report.data.update({"n": n, "profile": best.tolist(), "lex_profile": lex.tolist(), "degree": comb(n, 2)})
    return report
