"""The radical filtration of k[Z/9] and the three Hopf-type objects of dimension p.

Run: python demos/graded_and_small.py
"""
import itertools

from qhopf import QuasiData, cyclic_group_algebra, is_grouplike, kalpha_phi, make_alpha, trivialize_associator
from qhopf.catalog import make_cyclic_group_algebra
from qhopf.hopf import associated_graded

h = make_cyclic_group_algebra(3, 2)
G = associated_graded(h)
print("gr(k[Z/9]) at p = 3")
print("  dimension:", G.hopf.dim)
print("  radical degrees:", [int(d) for d in G.degrees])
print("  radically graded:", G.is_radically_graded())
print("  cocommutative:", G.hopf.cocommutative)
print("  generated by primitives:", G.primitively_generated())


def grouplikes(hopf):
    A = hopf.algebra
    return [v for v in itertools.product(range(hopf.p), repeat=A.dim) if is_grouplike(hopf, A.element(v))]


kz, ka = cyclic_group_algebra(3, 3), make_alpha(3, 1)
print("\ndimension 3 at p = 3")
print("  k[Z/3]        grouplikes:", len(grouplikes(kz)))
print("  kalpha_3      grouplikes:", len(grouplikes(ka)),
      "| associator trivializes:", trivialize_associator(QuasiData(ka)).success)
print("  (kalpha_3,Phi) associator trivializes:", trivialize_associator(kalpha_phi(3)).success)
