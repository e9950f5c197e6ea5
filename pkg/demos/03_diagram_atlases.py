"""Classifying the diagrams of reduced reflection factorizations.

Each linearly independent root set carries a weighted graph: vertices are
the roots, the edge weight records the order of the product of the two
reflections.  Three independent engines enumerate the diagram classes of a
type, and they agree wherever they overlap:

* the block-graph construction for types A, B, D;
* the exhaustive scan over rank-sized subsets of positive roots;
* Hurwitz orbits of quasi-Coxeter seed factorizations.
"""

from carterlib.diagrams import all_cycles_even, is_cyclically_orientable
from carterlib.families import (
    enumerate_by_hurwitz,
    enumerate_by_subsets,
    find_quasi_coxeter_class_seeds,
    gen_type_A,
)
from carterlib.factorizations import coxeter_factorization
from carterlib.roots import build_root_system

# Type A5: six classes, built constructively and confirmed by the scan.
cons = gen_type_A(5, with_witnesses=False)
oracle = enumerate_by_subsets(build_root_system("A", 5))
print("A5 construction:", len(cons), "classes; oracle:", len(oracle),
      "classes; equal:", cons.keys() == oracle.keys())

# The F4 atlas has five classes; three of them contain an odd cycle, so
# they fall outside the classically admissible family.
f4 = enumerate_by_subsets(build_root_system("F", 4))
for key in sorted(f4.entries):
    e = f4.entries[key]
    print(" F4 diagram", e.diagram.edges(),
          "| admissible:", all_cycles_even(e.diagram),
          "| cyclically orientable:", is_cyclically_orientable(e.diagram))

# The same classes drop out of Hurwitz orbits once every conjugacy class
# of quasi-Coxeter elements contributes a seed.
d4 = build_root_system("D", 4)
seeds = find_quasi_coxeter_class_seeds(d4, budget=3000)
print("D4 quasi-Coxeter classes found:", len(seeds))
hur = enumerate_by_hurwitz(seeds)
print("D4 via Hurwitz orbits:", len(hur), "classes; equal to oracle:",
      hur.keys() == enumerate_by_subsets(d4).keys())

# A Coxeter-element orbit alone also reaches every D4 class.
print("D4 via one Coxeter orbit:",
      len(enumerate_by_hurwitz([coxeter_factorization(d4)])), "classes")
