"""Verification suites run by ``conjiso verify <suite>``.

Each suite returns a :class:`VerificationReport`. ``max_n`` caps the largest
group size visited; ``seed`` drives the only random choice (sampled class
subsets when the exhaustive sweep would be too large).
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from math import factorial

from .bounds import (
    claim10_check,
    collapse_inequality,
    jensen_chain,
    partition_sum_bound_holds,
    lemma9_lhs,
    main_theorem_ratio,
    solve_K,
    solve_kappa,
)
from .characters import (
    character_table,
    chi_via_determinantal,
    determinantal_expansion,
    xi_bruteforce,
    xi_on_class,
    xi_two_row,
)
from .combinatorics import (
    class_representative,
    class_size,
    cycle_count_census,
    derangement_count,
    dominates,
    partitions_of,
)
from .optimizer import ben_efraim_check, conclusion_conjecture_check, xi_profile
from .report import VerificationReport
from .sets import (
    ConjClassSet,
    appendix_bound,
    boundary_bruteforce,
    boundary_via_classes,
    explicit_union,
    lex_boundary_profile,
    make_A_s,
    make_block_fixing,
)
from .spectral import (
    diaconis_lower_bound,
    eigenvalue_table,
    spectral_boundary,
    verify_eigenvector,
)

EXHAUSTIVE_SUBSETS = 1 << 12
SAMPLED_SUBSETS = 1000


def _class_subsets(n: int, rng: random.Random):
    p = len(partitions_of(n))
    if 1 << p <= EXHAUSTIVE_SUBSETS:
        return range(1 << p)
    return [rng.getrandbits(p) for _ in range(SAMPLED_SUBSETS)]


def suite_spectral(max_n: int = 7, seed: int = 0) -> VerificationReport:
    rng = random.Random(seed)
    rep = VerificationReport("spectral")
    for n in range(2, min(max_n, 8) + 1):
        bad = []
        for mask in _class_subsets(n, rng):
            A = ConjClassSet(n, mask)
            vals = (spectral_boundary(A), boundary_via_classes(A), boundary_bruteforce(explicit_union(A)))
            if len(set(vals)) != 1 or vals[0] < diaconis_lower_bound(A.size, n):
                bad.append((A, vals))
        rep.add("three_way_boundary", {"n": n}, len(bad), 0, not bad, bad[:1] or None)
    for n in range(2, min(max_n, 9) + 1):
        failing = [a for a in partitions_of(n) if not verify_eigenvector(a)]
        rep.add("eigenvector", {"n": n}, len(failing), 0, not failing, failing[:1] or None)
    for n in range(2, max(max_n, 2) + 1):
        mu = eigenvalue_table(n)
        parts = partitions_of(n)
        mono = all(
            mu[b] <= mu[a] for a in parts for b in parts if dominates(b, a)
        )
        rep.add("dominance_monotone", {"n": n}, mono, True, mono)
        second = min(mu.values[1:]) if len(parts) > 1 else None
        rep.add("mu2", {"n": n}, second, n, len(parts) == 1 or second == n)
    return rep


def suite_characters(max_n: int = 8, seed: int = 0) -> VerificationReport:
    rep = VerificationReport("characters")
    for n in range(1, min(max_n, 10) + 1):
        table = character_table(n)
        parts = partitions_of(n)
        sizes = [class_size(l) for l in parts]
        nf = factorial(n)
        ortho = all(
            sum(s * x * y for s, x, y in zip(sizes, table.values[a], table.values[b])) == (nf if a == b else 0)
            for a in range(len(parts))
            for b in range(a, len(parts))
        )
        rep.add("orthonormality", {"n": n}, ortho, True, ortho)
        det_ok = all(
            chi_via_determinantal(a, lam) == table[a, lam]
            for a in parts
            if n - a[0] <= 4
            for lam in parts
        )
        rep.add("determinantal_vs_mn", {"n": n}, det_ok, True, det_ok)
        two_row = all(
            xi_two_row(s, lam) == xi_on_class((n - s, s) if s else (n,), lam)
            for s in range(n // 2 + 1)
            for lam in parts
        )
        rep.add("xi_two_row", {"n": n}, two_row, True, two_row)
        if n <= 6:
            brute = all(
                xi_on_class(b, lam) == xi_bruteforce(b, class_representative(lam)) for b in parts for lam in parts
            )
            rep.add("xi_bruteforce", {"n": n}, brute, True, brute)
        if n <= 9:
            col = all(collapse_inequality(b, lam) for b in parts for lam in parts)
            rep.add("collapse", {"n": n}, col, True, col)
        worst = max(
            (determinantal_expansion(a).abs_coefficient_sum() - factorial(n - a[0] + 1), a)
            for a in parts
            if n - a[0] <= 4
        )
        rep.add("coefficient_ok", {"n": n}, worst[0], 0, worst[0] <= 0, worst[1])
    return rep


def suite_census(max_n: int = 10, seed: int = 0) -> VerificationReport:
    rep = VerificationReport("census")
    for m in range(2, 13):
        d = derangement_count(m)
        rep.add("derangements_third", {"m": m}, 3 * d, factorial(m), 3 * d >= factorial(m))
    for n in range(1, min(max_n, 10) + 1):
        nf = factorial(n)
        rep.add("class_sizes", {"n": n}, sum(class_size(l) for l in partitions_of(n)), nf,
                sum(class_size(l) for l in partitions_of(n)) == nf)
        bad = []
        for i in range(1, n + 1):
            total = 0
            for j in range(n // i + 1):
                D = cycle_count_census(n, i, j)
                total += D
                ref = Fraction(nf, i**j * factorial(j))
                if (i, j) == (1, n - 1):
                    ok = D == 0
                else:
                    ok = ref / 3 <= D <= ref
                if not ok:
                    bad.append((i, j, D))
            if total != nf:
                bad.append((i, "sum", total))
        rep.add("goncharov_sandwich", {"n": n}, len(bad), 0, not bad, bad[:1] or None)
        for s in range(1, n - 1):
            size = make_A_s(s, n).size
            lo, hi = Fraction(nf, 3 * factorial(s)), Fraction(nf, factorial(s))
            rep.add("A_s_sandwich", {"n": n, "s": s}, size, [lo, hi], lo <= size <= hi)
    for t in range(1, 21):
        rep.add("partition_sum_bound", {"t": t}, partition_sum_bound_holds(t), True, partition_sum_bound_holds(t))
    return rep


def suite_bounds(max_n: int = 9, seed: int = 0) -> VerificationReport:
    rep = VerificationReport("bounds")
    for n in range(2, min(max_n, 9) + 1):
        bad = [
            (lam, s)
            for s in range(1, min(4, n // 2) + 1)
            for lam in partitions_of(n)
            if not (lambda v: v[0] <= v[1] <= v[2])(jensen_chain(lam, s))
        ]
        rep.add("jensen_chain", {"n": n}, len(bad), 0, not bad, bad[:1] or None)
    for n in range(2, min(max_n, 6) + 1):
        ok = all(
            lemma9_lhs(ConjClassSet(n, m), 0) == ConjClassSet(n, m).measure
            for m in range(1 << len(partitions_of(n)))
        )
        rep.add("fixed_subsets_s0", {"n": n}, ok, True, ok)
    for M in (3, 4, 5, 6):
        for k, s in claim10_grid(M):
            r = claim10_check(s, k, M)
            rep.add("tail_sum", {"M": M, "k": k, "s": s}, r.log10_lhs_upper, r.log10_rhs, r.holds)
    for p in p_grid():
        for M in (3, 4, 5, 6, 18):
            bp = solve_K(p, M)
            n = witness_n(p)
            lower, upper = bp.t_sandwich(n)
            rep.add("K_sandwich", {"p": p, "M": M, "n": n}, bp.K, [bp.k_lower(), n],
                    bp.k_sandwich(n) and bp.residual <= 1e-12)
            rep.add("t_upper", {"p": p, "M": M, "n": n}, bp.t_p, Fraction(n, M), upper)
            if bp.t_sandwich_applies():
                rep.add("t_lower", {"p": p, "M": M}, bp.t_p, bp.t_lower(), lower)
    ks = [solve_kappa(Fraction(1, 10**6), i).k for i in range(1, 6)]
    rep.add("kappa_monotone", {"p": "1/1000000"}, ks, "non-increasing", ks == sorted(ks, reverse=True))
    for n in range(2, min(max_n, 7) + 1):
        r = main_theorem_ratio(n)
        rep.add("ratio_positive", {"n": n}, r["min_ratio"], 0, r["all_positive"] and r["floor_holds"], r["argmin"])
        rep.data[f"ratio_n{n}"] = r
    return rep


def suite_appendix(max_n: int = 7, seed: int = 0) -> VerificationReport:
    rep = VerificationReport("appendix")
    for n in range(2, min(max_n, 8) + 1):
        profile = lex_boundary_profile(n)
        worst = max((Fraction(int(profile[k])) - appendix_bound(n, k), k) for k in range(1, factorial(n) + 1))
        rep.add("appendix_bound", {"n": n}, worst[0], 0, worst[0] <= 0, {"k": worst[1]})
        nf1 = factorial(n - 1)
        eq = all(int(profile[c * nf1]) == diaconis_lower_bound(c * nf1, n) for c in range(n + 1))
        rep.add("floor_equality_first_column", {"n": n}, eq, True, eq)
        for s in range(n + 1):
            A = make_A_s(s, n)
            b = boundary_via_classes(A)
            rep.add("A_s_boundary", {"n": n, "s": s}, b, (s + 1) * (n - 1) * A.size, b <= (s + 1) * (n - 1) * A.size)
        for k in range(1, n + 1):
            if n % k:
                continue
            S = make_block_fixing(n, k)
            b = boundary_bruteforce(S)
            rep.add("block_boundary", {"n": n, "k": k}, b, k * (n - 1) * S.size, b <= k * (n - 1) * S.size)
            if 1 < k <= n // 2:
                lo = Fraction(n, 2 * k) * factorial(n - k)
                hi = Fraction(n, k) * factorial(n - k)
                rep.add("block_size", {"n": n, "k": k}, S.size, [lo, hi], lo < S.size <= hi)
    return rep


def suite_conjectures(max_n: int = 6, seed: int = 0) -> VerificationReport:
    rep = VerificationReport("conjectures")
    for n in range(1, min(max_n, 7) + 1):
        rep.extend(conclusion_conjecture_check(n))
        nf = factorial(n)
        profile = xi_profile(n)
        sym = all(nf - k in profile and profile[nf - k][0] == v[0] for k, v in profile.items())
        rep.add("xi_complement_symmetry", {"n": n}, sym, True, sym)
    for n in range(1, min(max_n, 4) + 1):
        rep.extend(ben_efraim_check(n))
    return rep


SUITES = {
    "spectral": suite_spectral,
    "characters": suite_characters,
    "census": suite_census,
    "bounds": suite_bounds,
    "appendix": suite_appendix,
    "conjectures": suite_conjectures,
}


def p_grid() -> list[Fraction]:
    """Measures from 1/2 down to 1e-60, spanning both sides of K = M for M <= 18."""
    grid = [Fraction(1, 2), Fraction(1, 3), Fraction(1, 10)]
    grid += [Fraction(1, 10**e) for e in (2, 3, 6, 10, 15, 20, 25, 30, 40, 50, 60)]
    grid += [Fraction(1, factorial(n)) for n in (5, 10, 20, 30, 40)]
    return grid


def witness_n(p: Fraction) -> int:
    """Smallest n with p >= 1/n!."""
    n = 1
    while p < Fraction(1, factorial(n)):
        n += 1
    return n


def claim10_grid(M: int) -> list[tuple[int, int]]:
    """(k, s) pairs with M s <= k and e^M <= k."""
    k0 = math.ceil(math.exp(M))
    out = []
    for k in (k0, k0 + 17, 2 * k0):
        for s in sorted({1, max(1, k // (2 * M)), k // M}):
            out.append((k, s))
    return out

