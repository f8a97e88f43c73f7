"""
Boundary of a union of conjugacy classes
========================================

Three independent counts of the edge-boundary in the transposition graph:
the spectral formula over irreducible characters, the class interaction
matrix, and a brute-force pass over every permutation.
"""

from conjiso import ConjClassSet, boundary_bruteforce, boundary_via_classes, partitions_of, spectral_boundary, weights
from conjiso.sets import explicit_union
from conjiso.spectral import diaconis_lower_bound, eigenvalue_table

n = 6
A = ConjClassSet.parse(n, "2+1+1+1+1, 3+3, 2+2+2")
print("classes:", A.to_json(), "size:", A.size)

# each irreducible alpha contributes mu_alpha * W_alpha^2 / n!
mu = eigenvalue_table(n)
W = weights(A)
for alpha, m, w in zip(partitions_of(n), mu.values, W.values):
    if w:
        print(f"  {str(alpha):<12} mu={m:<3} W={w}")

b_spec = spectral_boundary(A)
b_mat = boundary_via_classes(A)
b_brute = boundary_bruteforce(explicit_union(A))
print("spectral, matrix, brute:", b_spec, b_mat, b_brute)
assert b_spec == b_mat == b_brute

# the second eigenvalue gives a floor that no set can beat
print("floor:", diaconis_lower_bound(A.size, n))
