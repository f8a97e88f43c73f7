"""Numerical checks of the inequalities behind the conjugation-invariant bound.

Transcendental parameters (K, kappa) are solved in the log domain with a
residual certificate; everything downstream of them consumes only floors and
comparisons. The remaining inequalities are checked in exact arithmetic.
Logarithms in bound formulas are base 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

import numpy as np
from scipy.optimize import brentq

from .characters import character_table, determinantal_expansion, xi_on_class, xi_two_row
from .combinatorics import Partition, class_size, partitions_of
from .sets import ConjClassSet, interaction_matrix
from .sweep import GraySweep

RESIDUAL_TOL = 1e-12
DEFAULT_M = 18


def _as_fraction(p) -> Fraction:
    p = Fraction(p)
    if not 0 < p <= Fraction(1, 2):
        raise ValueError(f"p must lie in (0, 1/2], got {p}")
    return p


def ln_inverse(p: Fraction) -> float:
    """ln(1/p), accurate for p far below the double range."""
    return math.log(p.denominator) - math.log(p.numerator)


def log2_inverse(p: Fraction) -> float:
    return math.log2(p.denominator) - math.log2(p.numerator)


def log_ratio(p: Fraction) -> float:
    """log(1/p) / log log(2/p), the growth factor of the main bound."""
    return log2_inverse(p) / math.log2(log2_inverse(p) + 1)


@dataclass(frozen=True)
class BoundParams:
    p: Fraction
    K: float
    M: int
    t_p: int
    residual: float

    def k_lower(self) -> float:
        """log(1/p) / (2 log log(2/p)), the lower end of the K sandwich."""
        return log_ratio(self.p) / 2

    def k_sandwich(self, n: int | None = None) -> bool:
        """Lower bound on K, plus K <= n whenever p >= 1/n!."""
        ok = self.k_lower() <= self.K
        if n is not None and self.p >= Fraction(1, factorial(n)):
            ok = ok and self.K <= n
        return ok

    def t_lower(self) -> float:
        return log_ratio(self.p) / (4 * self.M)

    def t_sandwich_applies(self) -> bool:
        """The lower bound on t_p needs floor(K/M) >= K/(2M), i.e. K >= M."""
        return self.K >= self.M

    def t_sandwich(self, n: int) -> tuple[bool, bool]:
        """(lower holds, upper holds); upper is t_p <= n/M for p >= 1/n!."""
        upper = self.p < Fraction(1, factorial(n)) or self.t_p * self.M <= n
        return self.t_lower() <= self.t_p, upper


@dataclass(frozen=True)
class KappaParams:
    p: Fraction
    i: int
    kappa: float
    k: int
    residual: float


def solve_K(p, M: int = DEFAULT_M) -> BoundParams:
    """Solve K^(2K) = 1/p on [1, 2 ln(1/p) + 2]."""
    p = _as_fraction(p)
    if M < 3:
        raise ValueError("M must be at least 3")
    L = ln_inverse(p)
    K = brentq(lambda x: 2 * x * math.log(x) - L, 1.0, 2 * L + 2, xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=500)
    residual = abs(2 * K * math.log(K) - L) / L
    if residual > RESIDUAL_TOL:
        raise ArithmeticError(f"K solver residual {residual:.3g} for p={p}")
    return BoundParams(p, K, M, math.floor(K / M), residual)


def solve_kappa(p, i: int) -> KappaParams:
    """Solve i^kappa * kappa^kappa = 1/p."""
    p = _as_fraction(p)
    if i < 1:
        raise ValueError("i must be a positive integer")
    L = ln_inverse(p)
    li = math.log(i)

    def f(x):
        return x * (li + math.log(x)) - L

    lo = 1 / (math.e * i)  # f is increasing from here on and f(lo) < 0
    hi = max(2.0, lo * 2)
    while f(hi) <= 0:
        hi *= 2
    kappa = brentq(f, lo, hi, xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=500)
    residual = abs(f(kappa)) / L
    if residual > RESIDUAL_TOL:
        raise ArithmeticError(f"kappa solver residual {residual:.3g} for p={p}, i={i}")
    return KappaParams(p, i, kappa, math.floor(kappa), residual)


def lemma9_lhs(A: ConjClassSet, s: int) -> Fraction:
    """Average over S_n of 1_A(sigma) * (number of fixed s-subsets)."""
    if not 0 <= 2 * s <= A.n:
        raise ValueError("need 0 <= s <= n/2")
    total = sum(class_size(lam) * xi_two_row(s, lam) for lam in A.classes())
    return Fraction(total, factorial(A.n))


def jensen_chain(lam: Sequence[int], s: int) -> tuple[int, int, int]:
    """(xi_{(n-s,s)}, (sum_{i<=s} C_i)^s, s^(s-1) sum_{i<=s} C_i^s)."""
    lam = Partition(lam)
    if not 1 <= s or 2 * s > lam.n:
        raise ValueError("need 1 <= s <= n/2")
    counts = [lam.multiplicity(i) for i in range(1, s + 1)]
    return xi_two_row(s, lam), sum(counts) ** s, s ** (s - 1) * sum(c**s for c in counts)


def jensen_chain_check(lam: Sequence[int], s: int) -> bool:
    xi, middle, right = jensen_chain(lam, s)
    return xi <= middle <= right


@dataclass(frozen=True)
class TailSumReport:
    s: int
    k: int
    M: int
    cutoff: int
    lhs_upper: Fraction = field(repr=False)
    log10_lhs_upper: float = 0.0
    log10_rhs: float = 0.0
    holds: bool = False


def _log10(q: Fraction) -> float:
    return math.log10(q.numerator) - math.log10(q.denominator)


def claim10_check(s: int, k: int, M: int, extra_terms: int = 200) -> TailSumReport:
    """Certify sum_{j>=k} j^s / j! <= k^(-(1 - 3/M) k).

    The first ``extra_terms + 1`` terms are summed exactly; the rest is
    bounded by twice the next term, valid once consecutive term ratios drop
    below 1/2 (the cutoff is pushed out until they do). The comparison is
    exact: both sides are raised to the power M.
    """
    if M < 1 or s < 0 or M * s > k or math.exp(M) > k:
        raise ValueError(f"preconditions M*s <= k and e^M <= k fail for {(s, k, M)}")
    cutoff = k + extra_terms

    def ratio_ok(j):  # t_{j+1} / t_j <= 1/2
        return 2 * (j + 1) ** s <= (j + 1) * j**s

    while not ratio_ok(cutoff + 1):
        cutoff += extra_terms
    top = factorial(cutoff + 1)
    num = sum(j**s * (top // factorial(j)) for j in range(k, cutoff + 1))
    num += 2 * (cutoff + 1) ** s  # twice t_{cutoff+1}, scaled by (cutoff+1)!
    upper = Fraction(num, top)
    # upper <= k^(-(M-3)k/M)  <=>  upper^M * k^((M-3)k) <= 1
    holds = upper.numerator**M * k ** ((M - 3) * k) <= upper.denominator**M
    return TailSumReport(
        s, k, M, cutoff, upper, _log10(upper), -(M - 3) * k / M * math.log10(k), holds
    )


def w_bound_ingredients(alpha: Sequence[int]) -> dict:
    """Evaluate each link of the chain bounding |chi_alpha| by two-row xi's.

    Links: |chi| <= sum |c_ab| xi_b; xi_b <= (n - b_1)! xi_(b_1, n - b_1);
    the combined bound; and sum |c_ab| <= (u + 1)!.
    """
    alpha = Partition(alpha)
    n = alpha.n
    u = n - alpha[0]
    if u > 4 or n > 9:
        raise ValueError("ingredient check supported for n - alpha_1 <= 4, n <= 9")
    terms = determinantal_expansion(alpha).terms
    chi = character_table(n).row(alpha)
    coeff_sum = sum(abs(c) for c in terms.values())
    boundchi = collapse = combined = True
    for lam in partitions_of(n):
        xi = {b: xi_on_class(b, lam) for b in terms}
        collapsed = {b: factorial(n - b[0]) * xi_two_row(n - b[0], lam) for b in terms}
        boundchi &= abs(chi[lam]) <= sum(abs(c) * xi[b] for b, c in terms.items())
        collapse &= all(xi[b] <= collapsed[b] for b in terms)
        combined &= abs(chi[lam]) <= sum(abs(c) * collapsed[b] for b, c in terms.items())
    return {
        "alpha": alpha,
        "u": u,
        "boundchi": boundchi,
        "collapse": collapse,
        "combined": combined,
        "coefficient_sum": coeff_sum,
        "coefficient_bound": factorial(u + 1),
        "coefficient_ok": coeff_sum <= factorial(u + 1),
    }


def collapse_inequality(beta: Sequence[int], lam: Sequence[int]) -> bool:
    n = sum(beta)
    b1 = max(beta)
    return xi_on_class(beta, lam) <= factorial(n - b1) * xi_two_row(n - b1, lam)


def main_theorem_ratio(n: int, bins: Sequence[float] | None = None) -> dict:
    """Empirical ratio |dA| / (log(1/p)/loglog(2/p) * n * |A|) over every
    nonempty union of classes with |A| <= n!/2.

    No constant is asserted; the report carries the minimum, its witness and
    a histogram, plus the checks that every ratio is positive and every set
    meets the second-eigenvalue floor.
    """
    if not 1 <= n <= 8:
        raise ValueError("ratio sweep supported for n <= 8")
    table = partitions_of(n)
    nf, nf1 = factorial(n), factorial(n - 1)
    sizes = np.array([class_size(lam) for lam in table], dtype=np.int64)
    sweep = GraySweep(interaction_matrix(n).as_array(), sizes)
    edges = np.array(list(bins) if bins is not None else [0, 0.25, 0.5, 0.75, 1, 1.5, 2, 3, 4, np.inf])
    hist = np.zeros(len(edges) - 1, dtype=np.int64)
    best = (np.inf, None)
    count = 0
    all_positive = floor_ok = True
    for masks, size, bound in sweep.blocks():
        keep = (size > 0) & (2 * size <= nf)
        masks, size, bound = masks[keep], size[keep], bound[keep]
        if not len(size):
            continue
        p = size / nf
        lg = -np.log2(p)
        ratio = bound / (lg / np.log2(lg + 1) * n * size)
        all_positive &= bool((ratio > 0).all())
        floor_ok &= bool((bound * nf1 >= size * (nf - size)).all())
        hist += np.histogram(ratio, bins=edges)[0]
        count += len(size)
        j = int(np.argmin(ratio))
        if ratio[j] < best[0]:
            best = (float(ratio[j]), int(masks[j]))
    witness = ConjClassSet(n, best[1]) if best[1] is not None else None
    return {
        "n": n,
        "sets": count,
        "min_ratio": best[0],
        "argmin": witness,
        "argmin_size": witness.size if witness else None,
        "histogram_edges": [float(e) for e in edges],
        "histogram": hist.tolist(),
        "all_positive": all_positive,
        "floor_holds": floor_ok,
    }


def partition_sum_bound_holds(t: int) -> bool:
    """sum_{i<t} p(i) <= t!."""
    return sum(len(partitions_of(i)) for i in range(t)) <= factorial(t)

