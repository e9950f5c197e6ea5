"""Exact root systems and their reflection groups.

Every root system is a concrete list of coordinate vectors over the
rationals (or over Q(sqrt 5) for the icosahedral types), and every group
element is the permutation it induces on that list.  Nothing here ever
touches floating point.
"""

from carterlib import (
    build_root_system,
    cartan_pairing,
    classify_subsystem_type,
    reflect,
    smallest_root_subsystem,
    subgroup_closure,
)

# The D4 realization: all +-e_i +- e_j.
d4 = build_root_system("D", 4)
print(f"D4 has {len(d4.roots)} roots, {d4.n_positive} positive.")
print("Simple system:", [d4.roots[i] for i in d4.simple_indices])

# Reflections act by the textbook formula ...
alpha = d4.roots[d4.index_of(tuple(map(__import__("fractions").Fraction,
                                       (1, -1, 0, 0))))]
print("s_(e1-e2) maps e1-e2 to", reflect(alpha, alpha))

# ... and the group they generate has the expected order 2^(n-1) n! = 192.
closure = subgroup_closure(d4.simple_reflections())
print("order of W(D4):", closure.order)

# Cartan pairings are exact integers for the crystallographic types.
g2 = build_root_system("G", 2)
a, b = (g2.roots[i] for i in g2.simple_indices)
print("G2 Cartan pairings:", cartan_pairing(a, b), cartan_pairing(b, a))

# Subsystems: the four roots below span all of D4, while an A3-shaped
# triple only spans the 12 roots e_i - e_j.
from fractions import Fraction


def idx(*v):
    return d4.index_of(tuple(Fraction(x) for x in v))


big = smallest_root_subsystem(
    [idx(1, -1, 0, 0), idx(1, 1, 0, 0), idx(0, 1, -1, 0), idx(-1, 0, 0, 1)],
    d4)
small = smallest_root_subsystem(
    [idx(1, 0, -1, 0), idx(0, 1, -1, 0), idx(0, 0, 1, -1)], d4)
print("first set generates", classify_subsystem_type(big, d4),
      "with", len(big), "roots")
print("second set generates", classify_subsystem_type(small, d4),
      "with", len(small), "roots")

# The golden-field types work the same way.
h3 = build_root_system("H", 3)
print(f"H3 has {len(h3.roots)} roots and group order {h3.weyl_order()}.")
