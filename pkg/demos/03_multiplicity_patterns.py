r"""
Partition patterns and the onset of multiplicities
==================================================

A pattern such as ``42`` names the partition (3n - 6, 4, 2) at every level n.
Sweeping pattern multiplicities over levels shows which ones stabilize at 1,
which never appear, and how repeated irreducibles spread once n >= 5.
"""

import matplotlib.pyplot as plt

from wreathind import Family, decompose, mult_of_pattern

family = Family("C", 3, 1)
levels = range(2, 9)
patterns = ["0", "2", "3", "4", "22", "5", "41", "32", "42", "51", "1", "21"]

print("pattern " + " ".join(f"{n:>3}" for n in levels))
for p in patterns:
    print(f"{p:>7} " + " ".join(f"{mult_of_pattern(family, p, n):>3}" for n in levels))

print("\nlevel n- (restriction to S_{3n-1}) for 51 and 42:")
for n in range(6, 9):
    a, b = mult_of_pattern(family, "51", n, "minus"), mult_of_pattern(family, "42", n, "minus")
    print(f"  n={n}: {a} + {b} = {a + b}")

distinct, total, top = [], [], []
for n in levels:
    vec = decompose(family, n).multiplicities
    distinct.append(len(vec))
    total.append(vec.total_multiplicity())
    top.append(vec.max_multiplicity())

fig, ax = plt.subplots(figsize=(6, 4))
ax.semilogy(list(levels), distinct, "o-", label="distinct irreducibles")
ax.semilogy(list(levels), total, "s--", label="with multiplicity")
ax.set_xlabel("level n")
ax.set_ylabel("count")
ax2 = ax.twinx()
ax2.step(list(levels), top, where="mid", color="gray", label="max multiplicity")
ax2.set_ylabel("max multiplicity")
ax.legend(loc="upper left")
ax.set_title("Ind from C_{3,n} to S_{3n}")
fig.tight_layout()
fig.savefig("multiplicity_growth.png", dpi=120)
print("\nmax multiplicity by level:", dict(zip(levels, top)))
