"""A non-trivial associator on k[x]/(x^p) and why no twist removes it.

Run: python demos/associator_obstruction.py [p]
"""
import sys

from qhopf import (MultiplicativeCochain, QuasiData, associator_phi, is_multiplicative_coboundary,
                   make_alpha, scaling_automorphism, trivialize_associator, verify_quasi)

p = int(sys.argv[1]) if len(sys.argv) > 1 else 5
h = make_alpha(p, 1)
phi = associator_phi(p, 1, h)
print(f"O(alpha_{p}) = k[x]/(x^{p}), x primitive")
print("Phi =", phi)

rep = verify_quasi(QuasiData(h, phi))
for name, check in rep:
    print(f"  {name:40s} {'pass' if check else 'fail'}")

# Phi is a 3-cocycle in the multiplicative complex; is it d(F) for some F in 1 + I⊗I?
cob = is_multiplicative_coboundary(MultiplicativeCochain(h, 3, phi))
print("\nmultiplicative coboundary:", "yes" if cob else "no")
print("dim H^3 of the additive complex:", cob.cohomology.dim)
print("class of log(Phi) in H^3:", [int(v) for v in cob.class_coords])

# the degree-by-degree procedure stops at the same class
res = trivialize_associator(QuasiData(h, phi))
print("trivialize_associator:", "success" if res.success else f"stuck in radical degree {res.obstruction_degree}")
print("same class:", list(res.class_coords) == list(cob.class_coords))

# rescaling x by mu moves Phi_s to Phi_{s mu^(p+1)}
print("\nscaling x -> mu x:")
for mu in range(1, p):
    S = scaling_automorphism(p, mu, h)
    image = pow(mu, p + 1, p)
    print(f"  mu={mu}: Phi_1 -> Phi_{image}", S(phi) == associator_phi(p, image, h))
