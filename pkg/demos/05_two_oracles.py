r"""
Two independent permutation characters
======================================

The permutation character of S_mn on cosets of C_{m,n} or D_{m,n} is computed
by counting fixed hypermatchings (or cycle decompositions) of one permutation
per class, and again from the subgroup's cycle-type distribution alone.
Decomposing either gives the same multiplicities.
"""

import time

from wreathind import Family, decompose_class_function, enumerate_objects, permutation_character_enum
from wreathind.objects import induced_class_function, permutation_character_wreath, wreath_class_distribution

fam = Family("D", 3, 2)
print(fam, "objects:", len(enumerate_objects(fam)), "e.g.", enumerate_objects(fam)[:2])
print("cycle types in the subgroup:", wreath_class_distribution(fam))

for fam in [Family("C", 3, 3), Family("D", 3, 3), Family("C", 4, 2), Family("C", 3, 4)]:
    t0 = time.perf_counter()
    burnside = permutation_character_enum(fam)
    frobenius = induced_class_function(fam)
    same = burnside == frobenius
    agree = decompose_class_function(burnside) == permutation_character_wreath(fam)
    print(f"{fam}: class functions equal {same}, decompositions equal {agree} "
          f"({time.perf_counter() - t0:.1f}s)")
