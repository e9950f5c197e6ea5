from fractions import Fraction

import pytest

from carterlib.diagrams import (
    abstract_diagram,
    canonical_form,
    chordless_cycles,
    diagram_of,
    is_cyclically_orientable,
    is_isomorphic,
)
from carterlib.factorizations import coxeter_factorization
from carterlib.families import enumerate_by_subsets, find_witness, gen_type_A
from carterlib.presentations import (
    Presentation,
    cycle_relation_equivalence,
    free_reduce,
    hurwitz_presentation_transport,
    presentation_of,
    relations_hold_in_group,
    substitution_word,
    todd_coxeter,
    verify_iso,
)
from carterlib.roots import CapExceeded, build_root_system, subgroup_closure


def vec(*xs):
    return tuple(Fraction(x) for x in xs)


def d4_cycle_diagram():
    rs = build_root_system("D", 4)
    refs = [rs.positive_of(rs.index_of(vec(*v)))
            for v in ((1, -1, 0, 0), (0, 1, -1, 0), (1, 1, 0, 0),
                      (-1, 0, 0, 1))]
    return diagram_of(refs, rs)


# -- relator generation ----------------------------------------------------------

def test_dynkin_presentation_is_coxeter():
    rs = build_root_system("B", 3)
    d = diagram_of(rs.simple_indices, rs)
    p = presentation_of(d)
    # (R1) squares, (R2) pair relators, no cycles
    assert len(p.relators) == 3 + 3
    assert all(len(set(w)) <= 2 for w in p.relators)


def test_d4_cycle_relator_shape():
    d = d4_cycle_diagram()
    # arrange as the labeled cycle 0-1-2-3-0
    assert {frozenset((i, j)) for i, j, _ in d.edges()} == \
        {frozenset(p) for p in ((0, 1), (1, 2), (2, 3), (0, 3))}
    p = presentation_of(d)
    cycle_rels = [w for w in p.relators if len(set(w)) == 4]
    assert cycle_rels == [(0, 1, 2, 3, 2, 1) * 2]


def test_one_relator_per_qualifying_closing_edge():
    # B3 triangle: two order-4 edges, each a qualifying closing edge
    d = abstract_diagram(3, [(0, 1, 4), (0, 2, 4), (1, 2, 3)])
    p = presentation_of(d)
    cycle_rels = [w for w in p.relators if len(set(w)) == 3]
    assert len(cycle_rels) == 2


def test_all_order5_triangle_gets_both_special_relators():
    d = abstract_diagram(3, [(0, 1, 5), (0, 2, 5), (1, 2, 5)])
    p = presentation_of(d)
    extra = [w for w in p.relators if len(set(w)) == 3]
    assert (0, 1, 2, 1) * 3 in extra
    assert (1, 0, 1, 2, 1, 2) * 2 in extra
    assert len(extra) == 2


def test_mixed_crystallographic_icosahedral_rejected():
    d = abstract_diagram(3, [(0, 1, 5), (1, 2, 4)])
    with pytest.raises(ValueError):
        presentation_of(d)


def test_presentation_text_round_trip():
    d = d4_cycle_diagram()
    p = presentation_of(d)
    q = Presentation.from_text(p.to_text())
    assert q.n_generators == p.n_generators
    assert q.relators == p.relators


# -- coset enumeration ------------------------------------------------------------

def test_single_involution():
    assert todd_coxeter(Presentation(1, [(0, 0)])) == 2


def test_dihedral_orders():
    for m in (2, 3, 4, 5, 6, 7):
        p = Presentation(2, [(0, 0), (1, 1), (0, 1) * m])
        assert todd_coxeter(p) == 2 * m


def test_symmetric_group_presentation():
    # S4 on adjacent transpositions
    rels = [(0, 0), (1, 1), (2, 2), (0, 1) * 3, (1, 2) * 3, (0, 2) * 2]
    assert todd_coxeter(Presentation(3, rels)) == 24


def test_d4_cycle_presents_order_192():
    assert todd_coxeter(presentation_of(d4_cycle_diagram())) == 192


def test_subgroup_index():
    # index of a dihedral subgroup in S4
    rels = [(0, 0), (1, 1), (2, 2), (0, 1) * 3, (1, 2) * 3, (0, 2) * 2]
    p = Presentation(3, rels)
    assert todd_coxeter(p, subgroup=((0,), (1,))) == 4


def test_coset_cap():
    p = Presentation(2, [(0, 0), (1, 1), (0, 1) * 7])
    with pytest.raises(CapExceeded):
        todd_coxeter(p, coset_cap=5)


def test_infinite_presentation_overflows():
    # (5,5)-path Coxeter group is infinite: the cap must trip, the verdict
    # machinery reads that as undecided
    p = Presentation(3, [(0, 0), (1, 1), (2, 2), (0, 1) * 5, (1, 2) * 5,
                         (0, 2) * 2])
    with pytest.raises(CapExceeded):
        todd_coxeter(p, coset_cap=3000)


def test_coxeter_presentations_match_closure_orders():
    for label, rank in [("A", 3), ("B", 3), ("D", 4), ("G", 2), ("H", 3),
                        ("I", 5)]:
        rs = build_root_system(label, rank)
        d = diagram_of(rs.simple_indices, rs)
        expected = subgroup_closure(rs.simple_reflections()).order
        assert todd_coxeter(presentation_of(d)) == expected


# -- substitution of witnesses -------------------------------------------------------

def test_relations_hold_for_simple_systems():
    for label, rank in [("A", 3), ("B", 3), ("F", 4), ("H", 3)]:
        rs = build_root_system(label, rank)
        assert relations_hold_in_group(diagram_of(rs.simple_indices, rs))


def test_relations_hold_for_d4_cycle():
    assert relations_hold_in_group(d4_cycle_diagram())


def test_corrupted_relator_detected():
    d = d4_cycle_diagram()
    p = presentation_of(d)
    p.relators.append((0, 1, 0, 1))  # false: that pair has order 3
    assert not relations_hold_in_group(d, p)


# -- verify_iso -------------------------------------------------------------------------

def test_verify_iso_a4_atlas():
    atlas = gen_type_A(4)
    for e in atlas.entries.values():
        v = verify_iso(e.diagram)
        assert v.verdict == "iso"
        assert v.order_found == 120


def test_verify_iso_b3_atlas():
    atlas = enumerate_by_subsets(build_root_system("B", 3))
    for e in atlas.entries.values():
        v = verify_iso(e.diagram)
        assert v.verdict == "iso" and v.order_found == 48


def test_verify_iso_h3_split():
    # only the diagrams of reduced factorizations of Coxeter elements
    # present the icosahedral group
    atlas = enumerate_by_subsets(build_root_system("H", 3),
                                 track_coxeter=True)
    verdicts = {}
    for key, e in atlas.entries.items():
        v = verify_iso(e.diagram, coset_cap=20000)
        verdicts[e.coxeter_witness] = verdicts.get(e.coxeter_witness, [])
        verdicts[e.coxeter_witness].append(v.verdict)
    assert all(x == "iso" for x in verdicts[True])
    assert all(x != "iso" for x in verdicts[False])
    assert len(verdicts[True]) == 3 and len(verdicts[False]) == 2


def test_verify_iso_i2_atlases():
    for m in (3, 4, 5, 6):
        rs = build_root_system("I", m)
        atlas = enumerate_by_subsets(rs)
        assert len(atlas) == 1
        (e,) = atlas.entries.values()
        v = verify_iso(e.diagram)
        assert v.verdict == "iso" and v.order_found == 2 * m


def test_verify_iso_verdict_json():
    v = verify_iso(d4_cycle_diagram())
    data = v.to_json()
    assert data["verdict"] == "iso"
    assert data["order_expected"] == data["order_found"] == 192


def test_relations_hold_for_every_crystallographic_atlas_witness():
    # the surjectivity half never fails on the desk-scale atlases
    for label, rank in [("A", 3), ("B", 3), ("D", 4), ("F", 4), ("G", 2)]:
        atlas = enumerate_by_subsets(build_root_system(label, rank))
        for e in atlas.entries.values():
            assert relations_hold_in_group(e.diagram)


def test_verify_iso_e6_sample():
    # at least ten genuine E6 diagram classes, harvested from a capped
    # Hurwitz orbit (the full oracle is a long-running job), all at 51840
    from carterlib.families import enumerate_by_hurwitz
    from carterlib.factorizations import coxeter_factorization
    rs = build_root_system("E", 6)
    try:
        atlas = enumerate_by_hurwitz([coxeter_factorization(rs)],
                                     orbit_cap=3000)
    except CapExceeded as exc:
        atlas = exc.partial
    sample = [atlas.entries[k].diagram for k in sorted(atlas.entries)][:12]
    assert len(sample) >= 10
    for d in sample:
        v = verify_iso(d)
        assert v.verdict == "iso" and v.order_found == 51840


# -- relator-choice equivalence -----------------------------------------------------------

def test_cycle_relation_equivalence_d4():
    d = d4_cycle_diagram()
    (cyc,) = chordless_cycles(d)
    assert cycle_relation_equivalence(d, cyc)


def test_cycle_relation_equivalence_triangle():
    rs = build_root_system("A", 3)
    refs = find_witness(
        abstract_diagram(3, [(0, 1, 3), (1, 2, 3), (0, 2, 3)]), rs)
    d = diagram_of(refs, rs)
    (cyc,) = chordless_cycles(d)
    assert cycle_relation_equivalence(d, cyc)


def test_cycle_relation_equivalence_across_desk_atlases():
    # every relator choice agrees on every chordless cycle of every entry
    for label, rank in [("A", 4), ("B", 4), ("D", 4)]:
        atlas = enumerate_by_subsets(build_root_system(label, rank))
        for e in atlas.entries.values():
            for cyc in chordless_cycles(e.diagram):
                assert cycle_relation_equivalence(e.diagram, cyc)


def test_cycle_relation_equivalence_f4_mixed_cycle():
    # the admissible mixed-weight 4-cycle of type F4
    rs = build_root_system("F", 4)
    target = abstract_diagram(4, [(0, 1, 4), (0, 3, 3), (1, 2, 3),
                                  (2, 3, 4)])
    refs = find_witness(target, rs)
    d = diagram_of(refs, rs)
    cycles = chordless_cycles(d)
    assert len(cycles) == 1
    assert cycle_relation_equivalence(d, cycles[0])


# -- Hurwitz transport ----------------------------------------------------------------------

def test_transport_a3_path_to_triangle():
    rs = build_root_system("A", 3)
    d = diagram_of(rs.simple_indices, rs)
    # find the position of a non-commuting adjacent pair
    pos = next(i for i in range(1, 3) if d.orders[i - 1][i] >= 3)
    new_d, subst = hurwitz_presentation_transport(d, pos)
    assert todd_coxeter(presentation_of(d)) == 24
    assert todd_coxeter(presentation_of(new_d)) == 24


def test_transport_composite_is_identity():
    d = d4_cycle_diagram()
    for i in (1, 2, 3):
        if d.orders[i - 1][i] == 2:
            continue
        _, phi = hurwitz_presentation_transport(d, i)
        _, psi = hurwitz_presentation_transport(d, i, inverse=True)
        for j in range(d.n):
            word = substitution_word(psi, phi[j])
            assert free_reduce(word) == (j,)


def test_transport_commuting_pair_swaps():
    rs = build_root_system("B", 4)
    refs = [rs.positive_of(rs.index_of(vec(*v)))
            for v in ((1, -1, 0, 0), (0, 0, 1, -1), (0, 1, -1, 0),
                      (0, 0, 0, 1))]
    d = diagram_of(refs, rs)
    assert d.orders[0][1] == 2
    new_d, subst = hurwitz_presentation_transport(d, 1)
    assert subst[0] == (1,) and subst[1] == (0,)
    assert canonical_form(new_d) == canonical_form(d)


def test_transport_d6_figure_example():
    # the two-triangle chain moved into a non-orientable diagram, both
    # presenting the full group of order 23040
    rs = build_root_system("D", 6)
    left = abstract_diagram(6, [(0, 1, 3), (0, 2, 3), (1, 2, 3), (2, 3, 3),
                                (2, 4, 3), (3, 5, 3), (4, 5, 3)])
    refs = find_witness(left, rs)
    assert refs is not None
    d = diagram_of(refs, rs)
    new_d, _ = hurwitz_presentation_transport(d, 3)
    right = abstract_diagram(6, [(0, 1, 3), (0, 2, 3), (0, 3, 3), (1, 2, 3),
                                 (1, 3, 3), (2, 3, 3), (2, 4, 3), (2, 5, 3),
                                 (3, 5, 3), (4, 5, 3)])
    assert is_isomorphic(new_d, right)
    assert is_cyclically_orientable(d)
    assert not is_cyclically_orientable(new_d)
    assert verify_iso(d).order_found == 23040
    assert verify_iso(new_d).order_found == 23040


def test_free_reduce():
    assert free_reduce((0, 1, 1, 0)) == ()
    assert free_reduce((0, 1, 2, 2, 1, 3)) == (0, 3)
