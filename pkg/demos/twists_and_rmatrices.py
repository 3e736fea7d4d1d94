"""Skew twists on u(g)* and trivializing a triangular structure.

Run: python demos/twists_and_rmatrices.py [p]
"""
import sys

import numpy as np

from qhopf import (QuasiData, check_rmatrix, check_twist, field, make_u_abelian, make_u_dual,
                   permute_slots, skew_twist, tensor, trivialize_rmatrix, trunc_exp)
from qhopf.catalog import minimality_check

p = int(sys.argv[1]) if len(sys.argv) > 1 else 3
ud = make_u_dual(p, 2)
J = skew_twist(ud, [[0, 1], [p - 1, 0]])
print(f"u(g)* for abelian g of dim 2, p = {p}")
print("  J = E(x1⊗x2 - x2⊗x1) has", len(J.support()), "terms")
print("  twist equation:", check_twist(ud, J).passed)
print("  minimal (J21^-1 J has full rank):", minimality_check(ud, J))

# minimality tracks nondegeneracy of the form
rng = np.random.default_rng(0)
print("\nrandom antisymmetric forms on a 3-dimensional g (odd size, so never of full rank):")
ud3 = make_u_dual(p, 3)
for _ in range(3):
    s = np.triu(rng.integers(0, p, size=(3, 3)), 1)
    s = (s - s.T) % p
    print(f"  rank {field.rank(s, p)}: minimal = {minimality_check(ud3, skew_twist(ud3, s))}")

# an R-matrix E(t(x⊗y - y⊗x)) is undone by its square root
h = make_u_abelian(p, 2)
A = h.algebra
x, y = A.gen("x1"), A.gen("x2")
R = trunc_exp(tensor(x, y) - tensor(y, x))
q = QuasiData(h, r_matrix=R)
print(f"\nR = E(x⊗y - y⊗x) on u(g), p = {p}")
print("  R-matrix axioms:", check_rmatrix(q).passed)
Jr = trivialize_rmatrix(q)
print("  J21^-1 R J == 1⊗1:", permute_slots(Jr, (2, 1)).inverse() * R * Jr == A.one(2))
