"""
Characters of the symmetric group
=================================

The character table of S_n, built by the Murnaghan-Nakayama rule, and the
permutation characters xi that count fixed tabloids.
"""

from math import factorial

from conjiso import character_table, class_size, determinantal_expansion, partitions_of, xi_on_class

n = 5
table = character_table(n)
classes = partitions_of(n)

# rows are irreducibles, columns are cycle types, both in descending lex order
print("alpha      " + " ".join(f"{str(l):>9}" for l in classes))
for alpha, row in zip(classes, table.values):
    print(f"{str(alpha):<10} " + " ".join(f"{x:>9}" for x in row))

# column orthogonality: sum over classes of |C| chi_a chi_b is n! on the diagonal
sizes = [class_size(l) for l in classes]
gram = [[sum(s * x * y for s, x, y in zip(sizes, a, b)) for b in table.values] for a in table.values]
assert all(gram[i][j] == (factorial(n) if i == j else 0) for i in range(len(gram)) for j in range(len(gram)))
print("orthonormal:", True)

# an irreducible is a signed sum of permutation characters of dominating shapes
exp = determinantal_expansion((3, 2))
print("chi_(3,2) =", " ".join(f"{c:+d} xi_{b}" for b, c in exp.terms.items()))
for lam in classes:
    assert sum(c * xi_on_class(b, lam) for b, c in exp.terms.items()) == table[(3, 2), lam]
