"""The braid group shuffling reflection factorizations.

A factorization of a group element into reflections can be rewritten by
"Hurwitz moves": an adjacent pair (s, t) becomes (sts, s) or (t, tst).
The product never changes, and neither does reducedness.  Orbits of this
action enumerate all reduced factorizations of an element.
"""

from fractions import Fraction

from carterlib.factorizations import (
    ReflectionFactorization,
    coxeter_factorization,
    hurwitz_move,
    hurwitz_orbit,
    product,
    reflection_length,
)
from carterlib.roots import build_root_system

# Signed permutations make the moves easy to watch in type B.
b3 = build_root_system("B", 3)


def idx(*v):
    return b3.index_of(tuple(Fraction(x) for x in v))


f = ReflectionFactorization(b3, [idx(1, 0, 0), idx(1, -1, 0), idx(1, 0, -1)])
print("start:   ", f.to_text())
print("sigma_1: ", hurwitz_move(f, 1).to_text())
print("sigma_1^-1:", hurwitz_move(f, 1, inverse=True).to_text())
w = product(f)
print("product order:", w.order(),
      "- reflection length:", reflection_length(w))

# The orbit of a rank-2 Coxeter factorization is tiny ...
a2 = build_root_system("A", 2)
print("A2 Coxeter orbit size:", len(hurwitz_orbit(coxeter_factorization(a2))))

# ... while the D4 one already has 162 tuples: n! h^n / |W|.
d4 = build_root_system("D", 4)
orbit = hurwitz_orbit(coxeter_factorization(d4))
print("D4 Coxeter orbit size:", len(orbit))
c = product(coxeter_factorization(d4))
assert all(product(g) == c for g in orbit)
print("every orbit member multiplies back to the same Coxeter element")
