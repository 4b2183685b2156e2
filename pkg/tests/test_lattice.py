from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from facelat.lattice import (DuplicateElement, NotALattice, build_lattice,
                             decompose_by_atoms, decompose_by_coatoms,
                             lattice_map, verify_isomorphism)


def powerset_lattice(letters="ab"):
    els = [frozenset(c) for r in range(len(letters) + 1)
           for c in combinations(letters, r)]
    return build_lattice(els, lambda x, y: x <= y)


def test_powerset_lattice():
    lat = powerset_lattice()
    assert len(lat) == 4
    assert lat.elements[lat.bottom] == frozenset()
    assert lat.elements[lat.top] == frozenset("ab")
    assert sorted(lat.elements[i] for i in lat.atoms()) == [frozenset("a"), frozenset("b")]
    assert sorted(lat.elements[i] for i in lat.coatoms()) == [frozenset("a"), frozenset("b")]


def test_meet_join_conventions():
    lat = powerset_lattice()
    a, b = lat.index_of(frozenset("a")), lat.index_of(frozenset("b"))
    assert lat.elements[lat.meet([a, b])] == frozenset()
    assert lat.elements[lat.join([a, b])] == frozenset("ab")
    assert lat.meet([]) == lat.top
    assert lat.join([]) == lat.bottom
    assert lat.meet([lat.top]) == lat.top


def test_missing_supremum_is_rejected():
    els = [frozenset(), frozenset("a"), frozenset("b")]
    with pytest.raises(NotALattice):
        build_lattice(els, lambda x, y: x <= y)


def test_duplicate_descriptors_rejected():
    with pytest.raises(DuplicateElement):
        build_lattice([frozenset("a"), frozenset("a")], lambda x, y: x <= y)


def test_order_axioms_enforced():
    with pytest.raises(NotALattice):
        build_lattice([1, 2], lambda x, y: x != y)  # not reflexive


def test_two_chain_covers():
    # the single proper cover relation makes the top an atom and the bottom
    # a coatom; nothing lies strictly between
    lat = build_lattice([frozenset(), frozenset("x")], lambda x, y: x <= y)
    assert lat.atoms() == [1]
    assert lat.coatoms() == [0]
    assert lat.hasse_edges() == [(0, 1)]


def test_hasse_edges_powerset():
    lat = powerset_lattice()
    assert len(lat.hasse_edges()) == 4
    chain = build_lattice([frozenset(), frozenset("x")], lambda x, y: x <= y)
    assert chain.hasse_edges() == [(0, 1)]


def test_atoms_coatoms_match_hasse_endpoints():
    lat = powerset_lattice("abc")
    edges = lat.hasse_edges()
    assert set(lat.atoms()) == {j for i, j in edges if i == lat.bottom}
    assert set(lat.coatoms()) == {i for i, j in edges if j == lat.top}


def test_modularity_of_powerset():
    assert powerset_lattice("abc").is_modular()


def test_pentagon_is_not_modular():
    # N5: 0 < a < b < 1 and 0 < c < 1 with c incomparable to a, b
    order = {
        ("0", "0"), ("a", "a"), ("b", "b"), ("c", "c"), ("1", "1"),
        ("0", "a"), ("0", "b"), ("0", "c"), ("0", "1"),
        ("a", "b"), ("a", "1"), ("b", "1"), ("c", "1"),
    }
    lat = build_lattice(["0", "a", "b", "c", "1"], lambda x, y: (x, y) in order)
    assert not lat.is_modular()


def test_verify_isomorphism_directions():
    lat = powerset_lattice()
    ident = lattice_map(lat, lat, lambda e: e, "isotone")
    assert verify_isomorphism(ident).passed
    comp = lattice_map(lat, lat, lambda e: frozenset("ab") - e, "antitone")
    assert verify_isomorphism(comp).passed
    wrong = lattice_map(lat, lat, lambda e: frozenset("ab") - e, "isotone")
    rep = verify_isomorphism(wrong)
    assert not rep.passed and rep.bijective


def test_isomorphism_symmetric_in_inverse():
    from facelat.lattice import LatticeMap
    lat = powerset_lattice()
    comp = lattice_map(lat, lat, lambda e: frozenset("ab") - e, "antitone")
    rep = verify_isomorphism(comp)
    inverse_mapping = [0] * len(comp.mapping)
    for i, t in enumerate(comp.mapping):
        inverse_mapping[t] = i
    inv = LatticeMap(lat, lat, tuple(inverse_mapping), "antitone")
    assert rep.passed == verify_isomorphism(inv).passed is True


def test_non_injective_map_reported():
    lat = powerset_lattice()
    collapse = lattice_map(lat, lat, lambda e: frozenset(), "isotone")
    rep = verify_isomorphism(collapse)
    assert not rep.injective and not rep.passed
    assert any("not injective" in f for f in rep.failures)


def test_decompositions():
    lat = powerset_lattice("abc")
    top_f = frozenset("abc")
    idx = lat.index_of(frozenset("ab"))
    atoms = decompose_by_atoms(lat, idx, 2)
    assert atoms is not None and len(atoms) == 2
    co = decompose_by_coatoms(lat, lat.index_of(frozenset("a")), 2)
    assert co is not None and len(co) == 2
    assert decompose_by_atoms(lat, lat.index_of(top_f), 2) is None  # needs 3


def test_dot_output():
    lat = powerset_lattice()
    dot = lat.to_dot("boolean")
    assert dot.startswith("digraph boolean")
    assert dot.count("->") == 4
    assert "rank=same" in dot


@settings(max_examples=40, deadline=None)
@given(st.sets(st.frozensets(st.integers(min_value=0, max_value=4), max_size=4),
               max_size=6))
def test_closure_families_build_lattices(family):
    # close a random family under intersection and add bottom/top: the result
    # is a complete lattice ordered by inclusion with meet = intersection
    universe = frozenset(range(5))
    sets = {universe, frozenset()} | {frozenset(s) for s in family}
    changed = True
    while changed:
        changed = False
        for a in list(sets):
            for b in list(sets):
                if a & b not in sets:
                    sets.add(a & b)
                    changed = True
    for a in list(sets):
        for b in list(sets):
            ups = [u for u in sets if u >= a | b]
            join = min(ups, key=len)
            assert all(join <= u or not (u >= a | b) for u in sets)
    lat = build_lattice(sorted(sets, key=lambda s: (len(s), sorted(s))),
                        lambda x, y: x <= y)
    for i, a in enumerate(lat.elements):
        for j, b in enumerate(lat.elements):
            assert lat.elements[lat.meet([i, j])] == a & b
