"""
Smallest boundary among conjugation-invariant sets
==================================================

A Gray-code sweep over all unions of classes finds, for each achievable
size k, the least boundary. The sets A_s (at least s fixed points) are the
natural candidates; the sweep shows how close they come.
"""

from math import factorial

from conjiso import boundary_via_classes, make_A_s, xi_min
from conjiso.optimizer import xi_profile
from conjiso.spectral import diaconis_lower_bound

n = 7
profile = xi_profile(n)
print(f"{len(profile)} achievable sizes out of {factorial(n) + 1}")

print(" s   |A_s|  boundary  best at that size  floor")
for s in range(n + 1):
    A = make_A_s(s, n)
    best = profile[A.size][0]
    print(f"{s:>2} {A.size:>7} {boundary_via_classes(A):>9} {best:>18} {float(diaconis_lower_bound(A.size, n)):>8.1f}")

r = xi_min(n, 92)
print("witness for k=92:", r.witness.to_json(), "boundary", r.min_boundary)
