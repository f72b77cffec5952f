r"""
Specht modules inside the span of perfect matchings
===================================================

For an even shape, sending a tabloid row to the sum of its perfect matchings
and a tabloid to the union of its rows' images carries the Specht module into
C[perfect matchings of K_2n].  The image of the row-reading polytabloid is
nonzero and sits in a single isotypic component.
"""

from wreathind import Tabloid, f_tabloid, polytabloid_image
from wreathind.matching import base_matching, matching_module
from wreathind.partitions import is_even, partitions_of

print(f_tabloid(Tabloid.of([{1, 2, 3, 4}, {5, 6}])))
print(polytabloid_image((2, 2)))

n = 3
module = matching_module(n)
print(f"\n{len(module.matchings)} perfect matchings of K_{2 * n}")
for lam in [p for p in partitions_of(2 * n) if is_even(p)]:
    image = polytabloid_image(lam)
    v = module.vector(image)
    hits = [mu for mu in partitions_of(2 * n) if module.isotypic_projection(mu, v).any()]
    print(f"{str(lam):>10}: {len(image):>2} terms, base coefficient "
          f"{image.coefficient(base_matching(n))}, isotypic in {hits}")
