"""
Parameters of the asymptotic bound
==================================

K solves K^(2K) = 1/p and kappa solves i^kappa kappa^kappa = 1/p. Both are
found in the log domain and carry a residual certificate.
"""

from fractions import Fraction

from conjiso import claim10_check, solve_K, solve_kappa

for e in (1, 6, 30, 60):
    p = Fraction(1, 10**e)
    bp = solve_K(p, M=6)
    print(f"p=1e-{e:<3} K={bp.K:9.4f}  lower={bp.k_lower():8.4f}  t_p={bp.t_p}  residual={bp.residual:.1e}")

p = Fraction(1, 10**6)
print("k_p(i), i=1..6:", [solve_kappa(p, i).k for i in range(1, 7)])

# the tail sum of j^s / j! is certified with exact rationals
r = claim10_check(s=67, k=404, M=6)
print(f"tail <= 10^{r.log10_lhs_upper:.1f}, bound 10^{r.log10_rhs:.1f}, holds={r.holds}")
