r"""
Level-by-level recursion for Ind from C_{3,n}
=============================================

Each level is recovered from the previous one: lift level n-1 by Pieri's rule
(two boxes, for m = 3), then solve for the nonnegative decomposition at level
n that restricts to the lifted vector and contains the trivial module once.
The solver enumerates every solution, so uniqueness is checked rather than
assumed.  The character oracle confirms every row.
"""

from wreathind import Family, decompose, restricted_target, solve_level

family = Family("C", 3, 1)

for n in range(1, 6):
    level = decompose(family, n)
    rows = " ".join(str(list(p)) for p in level.multiplicities.expanded())
    print(f"n={n} ({level.uniqueness}): {rows}")

# The step from n=4 to n=5, spelled out.
level4 = decompose(family, 4)
target = restricted_target(level4)
print(f"\nlevel 5- has {target.total_multiplicity()} components over partitions of {target.level_size}")
solutions = solve_level(target, 15)
print(f"{len(solutions)} solution(s); (9,4,2) occurs {solutions[0][(9, 4, 2)]} times")

oracle = decompose(family, 5, "oracle")
print("oracle agrees:", oracle.multiplicities == solutions[0])

# The same machinery for D_{3,n} is not pinned down by the trivial module alone.
try:
    decompose(Family("D", 3, 2))
except Exception as exc:
    print("\nD_{3,2}:", exc)
    for sol in exc.result.solutions:
        print("   candidate", sol)
    print("   oracle picks", exc.result.multiplicities)
