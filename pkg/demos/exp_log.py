"""Truncated exponential and logarithm on tensors of the augmentation ideal.

Run: python demos/exp_log.py
"""
import numpy as np

from qhopf import (MultiplicativeCochain, cyclic_group_algebra, make_u_dual, tensor, trunc_exp,
                   trunc_log, truncated_polynomial_algebra)
from qhopf.cohomology import hopf_coboundary, multiplicative_coboundary
from qhopf.truncexp import truncated_series

A = truncated_polynomial_algebra(3, [3])
x = A.gen("x")
print("k[x]/(x^3), p = 3")
print("  E(x⊗x)           =", trunc_exp(tensor(x, x)))
print("  E(x⊗x + x⊗x^2)   =", trunc_exp(tensor(x, x) + tensor(x, x * x)))
print("  L(E(x⊗x))        =", trunc_log(trunc_exp(tensor(x, x))))

# E is a homomorphism from (I⊗I, +) to (1 + I⊗I, ·)
h = make_u_dual(3, 2)
B = h.algebra
rng = np.random.default_rng(1)
s, t = B.random_element(rng, 2, in_ideal=True), B.random_element(rng, 2, in_ideal=True)
print("\nu(g)* with dim g = 2, random s, t in I⊗I:")
print("  E(s+t) == E(s)E(t):", trunc_exp(s + t) == trunc_exp(s) * trunc_exp(t))
print("  L(E(s)) == s:      ", trunc_log(trunc_exp(s)) == s)

# at p = 2 the naive series exp(T+U) = 1 + T + U misses the cross term
C = truncated_polynomial_algebra(2, [2, 2], names=["x", "y"])
T, U = tensor(C.gen("x"), C.gen("x")), tensor(C.gen("y"), C.gen("y"))
print("\np = 2, T = x⊗x, U = y⊗y:")
print("  E(T+U)          =", trunc_exp(T + U))
print("  naive series    =", truncated_series(T + U))

# E and the coboundary do not commute in degree one
k2 = cyclic_group_algebra(2, 2)
G = k2.algebra
u = G.one() + G.gen("g")
print("\nk[Z/2], u = 1 + g (E(du) equals 1 + (1+g)⊗(1+g) in characteristic 2):")
print("  E(du)  =", trunc_exp(hopf_coboundary(u, k2)))
print("  d(E u) =", multiplicative_coboundary(MultiplicativeCochain(k2, 1, truncated_series(u))).value)
