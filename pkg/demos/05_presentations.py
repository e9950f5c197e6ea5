"""Diagram presentations and their certification by coset enumeration.

A diagram presents a group: one involution per vertex, the pair relator
(t_i t_j)^(m_ij) per edge, and one extra squared-word relator per
qualifying chordless cycle.  Substituting the witness reflections shows
the presented group surjects onto the reflection group; coset enumeration
then pins the order, and equal finite orders force isomorphism.
"""

from fractions import Fraction

from carterlib.diagrams import chordless_cycles, diagram_of
from carterlib.families import enumerate_by_subsets
from carterlib.presentations import (
    cycle_relation_equivalence,
    hurwitz_presentation_transport,
    presentation_of,
    relations_hold_in_group,
    todd_coxeter,
    verify_iso,
)
from carterlib.roots import build_root_system

d4 = build_root_system("D", 4)


def idx(*v):
    return d4.positive_of(d4.index_of(tuple(Fraction(x) for x in v)))


# The chordless 4-cycle of type D4 and its presentation.
cycle = diagram_of([idx(1, -1, 0, 0), idx(0, 1, -1, 0), idx(1, 1, 0, 0),
                    idx(-1, 0, 0, 1)], d4)
pres = presentation_of(cycle)
print("relators:")
for w in pres.relators:
    print("  ", " ".join(str(x + 1) for x in w))
print("presented order:", todd_coxeter(pres), "- |W(D4)| = 192")
print("witness relations hold:", relations_hold_in_group(cycle))
print("verdict:", verify_iso(cycle).verdict)

# Any numbering or direction of the cycle gives an equivalent relator.
(cyc,) = chordless_cycles(cycle)
print("all relator choices agree:", cycle_relation_equivalence(cycle, cyc))

# A Hurwitz move transports the presentation along explicit substitutions.
new_d, subst = hurwitz_presentation_transport(cycle, 1)
print("moved diagram edges:", new_d.edges())
print("generator substitution:", {k + 1: tuple(x + 1 for x in v)
                                  for k, v in subst.items()})
print("moved order:", todd_coxeter(presentation_of(new_d)))

# The icosahedral types need the modified cycle relators; only the
# diagrams coming from Coxeter-element factorizations present the group.
h3 = enumerate_by_subsets(build_root_system("H", 3), track_coxeter=True)
for e in h3.entries.values():
    v = verify_iso(e.diagram, coset_cap=20000)
    tag = "coxeter" if e.coxeter_witness else "excluded"
    print(f"H3 {tag:8s} {str(e.diagram.edges()):46s} -> {v.verdict}")
