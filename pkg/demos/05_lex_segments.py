"""
Lexicographic initial segments
==============================

The first k permutations in lex order are conjectured to minimise the
boundary among all k-sets. For n = 4 every one of the 2^24 subsets is
swept and the per-size minimum compared with the segment profile.
"""

import numpy as np

from conjiso.optimizer import ben_efraim_check
from conjiso.sets import appendix_bound, lex_boundary_profile

rep = ben_efraim_check(4)
best = np.array(rep.data["profile"])
lex = np.array(rep.data["lex_profile"])
print("min over all sets:", best.tolist())
print("lex segments     :", lex.tolist())
print("lex is optimal at every k:", bool((best == lex).all()))

# the segment boundary stays below (t + 3/2)(n - 1) k
n = 6
prof = lex_boundary_profile(n)
ratio = max(float(prof[k] / appendix_bound(n, k)) for k in range(1, len(prof)))
print(f"n={n}: worst boundary / bound = {ratio:.3f}")
