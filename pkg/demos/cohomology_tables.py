"""Dimensions of additive cohomology and a brute-force look at twists of k[Z/3].

Run: python demos/cohomology_tables.py
"""
from math import comb

from qhopf import (additive_cohomology, brute_force_h2_multiplicative, canonical_h3_basis,
                   cyclic_group_algebra, function_algebra, make_alpha, make_alpha_product)

print("H^n of O(alpha_{p,r}) with trivial coefficients")
print("  p r   H1 H2 H3")
for p, r in ((2, 1), (2, 2), (3, 1), (3, 2), (5, 1)):
    R = make_alpha(p, r).algebra
    dims = [additive_cohomology(R, n).dim for n in (1, 2, 3)]
    print(f"  {p} {r}   " + "  ".join(map(str, dims)))

print("\nH^3 of products and the canonical basis")
for p, rs in ((3, (1, 1)), (2, (1, 1, 1)), (3, (1, 2))):
    R = make_alpha_product(p, rs).algebra
    basis = canonical_h3_basis([(p, r) for r in rs])
    n = len(rs)
    print(f"  p={p} r={rs}: dim H^3 = {additive_cohomology(R, 3).dim}, "
          f"basis size {len(basis)} (n^2 + C(n,3) = {n * n + comb(n, 3)})")

print("\nsemisimple GF(3)^3:", [additive_cohomology(function_algebra(3, 3).algebra, n).dim for n in (1, 2, 3)])

# every twist of k[Z/3] over GF(3), against gauge transforms by 1 + I
rep = brute_force_h2_multiplicative(cyclic_group_algebra(3, 3))
print("\nk[Z/3] over GF(3):")
for key in ("candidates", "cocycles", "gauge_candidates", "distinct_coboundaries", "cocycles_with_witness"):
    print(f"  {key:22s} {rep[key]}")
# d(F) only depends on F modulo grouplikes, so 9 gauge elements give 3 coboundaries;
# the remaining cocycles become coboundaries after extending scalars to GF(27)
