r"""
Characters and branching for S_N
================================

The vocabulary used everywhere else: partitions, Specht dimensions,
Murnaghan-Nakayama character values, and the one-box / horizontal-strip rules
that carry a decomposition from S_N to S_{N+k}.
"""

from math import factorial

from wreathind import (
    MultiplicityVector,
    add_horizontal_strip,
    irreducible_character,
    iterated_add,
    mn_char,
    partitions_of,
    remove_one_box,
)
from wreathind.characters import class_size
from wreathind.partitions import dim_specht

# The character table of S_4, rows indexed by irreducibles, columns by cycle types.
parts = partitions_of(4)
print("cycle types:", parts)
for lam in parts:
    print(f"{str(lam):>14}", [mn_char(lam, rho) for rho in parts])

# Column orthogonality, computed exactly.
chi = irreducible_character((2, 2))
print("<chi, chi> =", sum(class_size(r) * chi[r] ** 2 for r in parts) / factorial(4))

# Restricting S^(4,2) to S_5 removes a corner; the dimensions add up.
print((4, 2), "->", sorted(remove_one_box((4, 2)), reverse=True))
print(dim_specht((4, 2)), "=", " + ".join(str(dim_specht(mu)) for mu in remove_one_box((4, 2))))

# Pieri: inducing S^(3) x trivial(S_2) adds a horizontal strip of two boxes.
print("Pieri  (3) + 2:", sorted(add_horizontal_strip((3,), 2), reverse=True))
# Plain induction through S_4 to S_5 counts box-addition paths instead.
print("Induce (3) + 2:", iterated_add((3,), 2))

v = MultiplicityVector(6, {(6,): 1, (4, 2): 1})
print(v, "total dimension", v.total_dimension())
