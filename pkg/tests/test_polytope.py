from fractions import Fraction as F
from itertools import product

import pytest

from facelat.errors import (NotAFace, OriginNotInterior, PointNotInBody,
                            ZeroDirection)
from facelat.exactgeom import full_space, pos_hull, subspace_cone, unit, vec
from facelat.lattice import decompose_by_coatoms, lattice_map, verify_isomorphism
from facelat.polytope import (ConeElement, Polytope, atom_decomposition,
                              coatom_decomposition, conjugate_face,
                              cylinder_normal_check, exposed_face_lattice,
                              exposed_meet, face_lattice, is_sharp_exposed,
                              is_sharp_normal, lift_face, lifted_face_lattices,
                              minkowski_atom_check, normal_cone,
                              normal_cone_lattice, polar, pos_iso_check,
                              project_polytope, sup_exposed, support,
                              touching_cone_at, touching_cone_lattice)


def square():
    return Polytope((vec(-1, -1), vec(1, -1), vec(1, 1), vec(-1, 1)))


def cube():
    return Polytope(tuple(vec(*p) for p in product([-1, 1], repeat=3)))


def triangle():
    return Polytope((vec(0, 0), vec(2, 0), vec(1, 1)))


def test_vertex_extremality_enforced():
    with pytest.raises(ValueError):
        Polytope((vec(0, 0), vec(2, 0), vec(1, 0)))
    with pytest.raises(ValueError):
        Polytope((vec(0, 0), vec(0, 0)))
    with pytest.raises(ValueError):
        Polytope(())


def test_support_square():
    sq = square()
    h, face = support(sq, vec(1, 0))
    assert h == 1 and {sq.vertices[i] for i in face.vertex_indices} == {vec(1, -1), vec(1, 1)}
    h, face = support(sq, vec(1, 1))
    assert h == 2 and {sq.vertices[i] for i in face.vertex_indices} == {vec(1, 1)}
    with pytest.raises(ZeroDirection):
        support(sq, vec(0, 0))


def test_support_perpendicular_to_segment():
    seg = Polytope((vec(0, 0), vec(2, 0)))
    h, face = support(seg, vec(0, 1))
    assert h == 0 and len(face.vertex_indices) == 2


def test_face_lattice_sizes():
    assert len(face_lattice(Polytope((vec(0,), vec(2,))))) == 4
    assert len(face_lattice(square())) == 10
    assert len(face_lattice(cube())) == 28


def test_square_face_lattice_structure():
    lat = face_lattice(square())
    atoms = [lat.elements[i] for i in lat.atoms()]
    coatoms = [lat.elements[i] for i in lat.coatoms()]
    assert len(atoms) == 4 and all(f.dim == 0 for f in atoms)
    assert len(coatoms) == 4 and all(f.dim == 1 for f in coatoms)
    assert len(lat.hasse_edges()) == 16  # 4 + 8 + 4
    right = lat.index_of((1, 2))  # edge x = 1
    top = lat.index_of((2, 3))    # edge y = 1
    met = lat.elements[lat.meet([right, top])]
    assert met.vertex_indices == (2,)  # the corner (1, 1)


def test_two_face_routes_agree():
    for p in (square(), triangle(), cube()):
        brute = {f.key for f in face_lattice(p).elements}
        hyper = {f.key for f in exposed_face_lattice(p).elements}
        assert brute == hyper


def test_exposed_lattice_single_point():
    pt = Polytope((vec(1, 1),))
    lat = exposed_face_lattice(pt)
    assert len(lat) == 2


def test_normal_cones_of_square():
    sq = square()
    corner = sq.face_of_point(vec(1, 1))
    assert normal_cone(sq, corner) == pos_hull([vec(1, 0), vec(0, 1)])
    edge = sq.face_of_point(vec(1, 0))
    assert normal_cone(sq, edge) == pos_hull([vec(1, 0)])
    whole = sq.make_face(frozenset(range(4)))
    assert normal_cone(sq, whole).cone_dim == 0
    assert normal_cone(sq, sq.make_face(frozenset())) == full_space(2)
    with pytest.raises(NotAFace):
        normal_cone(sq, sq.make_face(frozenset({0, 2})))  # diagonal


def test_normal_cone_of_lower_dimensional_body():
    seg = Polytope((vec(0, 0), vec(2, 0)))
    whole = seg.make_face(frozenset({0, 1}))
    assert normal_cone(seg, whole) == subspace_cone([vec(0, 1)], 2)
    lat = normal_cone_lattice(seg)
    assert len(lat) == 4  # y-axis, two halfplanes, plane


def test_normal_lattice_sizes():
    assert len(normal_cone_lattice(square())) == 10
    assert len(normal_cone_lattice(cube())) == 28


def test_point_degenerate_normal_lattice():
    pt = Polytope((vec(1, 1),))
    lat = normal_cone_lattice(pt)
    assert len(lat) == 1  # the whole plane is both improper cones at once


def test_touching_equals_normal():
    for p in (square(), cube(), Polytope((vec(0, 0), vec(2, 0)))):
        nl = {e.key for e in normal_cone_lattice(p).elements}
        tl = {e.key for e in touching_cone_lattice(p).elements}
        assert nl == tl


def test_touching_cone_at():
    sq = square()
    assert touching_cone_at(sq, vec(1, 0)) == pos_hull([vec(1, 0)])
    assert touching_cone_at(sq, vec(2, 1)) == pos_hull([vec(1, 0), vec(0, 1)])
    assert touching_cone_at(sq, vec(1, 1)) == pos_hull([vec(1, 0), vec(0, 1)])
    with pytest.raises(ZeroDirection):
        touching_cone_at(sq, vec(0, 0))


def test_lift_of_exposed_face_is_exposed_face_of_direction():
    tri = triangle()
    q = project_polytope(tri, [vec(1, 0)])
    for f in exposed_face_lattice(q).elements:
        if f.exposing_normal is None:
            continue
        lifted = lift_face(tri, [vec(1, 0)], f)
        _, direct = support(tri, f.exposing_normal)
        assert lifted.vset == direct.vset


def test_antitone_isomorphism():
    for p in (square(), cube(), triangle(), Polytope((vec(-1,), vec(1,)))):
        fl = exposed_face_lattice(p)
        nl = normal_cone_lattice(p)
        rep = verify_isomorphism(lattice_map(
            fl, nl, lambda f: ConeElement(normal_cone(p, f)), "antitone"))
        assert rep.passed, rep.failures


def test_sup_exposed_is_identity_on_faces():
    sq = square()
    for f in face_lattice(sq).elements:
        assert sup_exposed(sq, f).vset == f.vset


def test_exposed_meet():
    sq = square()
    face, witness = exposed_meet(sq, [vec(1, 0), vec(0, 1)])
    assert {sq.vertices[i] for i in face.vertex_indices} == {vec(1, 1)}
    assert witness == vec(1, 1)
    face, witness = exposed_meet(sq, [vec(1, 0), vec(-1, 0)])
    assert face.vertex_indices == () and witness is None
    c = cube()
    face, _ = exposed_meet(c, [vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)])
    assert {c.vertices[i] for i in face.vertex_indices} == {vec(1, 1, 1)}


def test_polar_bodies():
    assert set(polar(square()).vertices) == {vec(1, 0), vec(0, 1), vec(-1, 0), vec(0, -1)}
    oct_ = polar(cube())
    assert set(oct_.vertices) == {vec(*p) for p in
                                  [(1,0,0),(-1,0,0),(0,1,0),(0,-1,0),(0,0,1),(0,0,-1)]}
    assert set(polar(oct_).vertices) == set(cube().vertices)
    with pytest.raises(OriginNotInterior):
        polar(Polytope((vec(0, 0), vec(2, 0))))
    with pytest.raises(OriginNotInterior):
        polar(triangle())  # origin on the boundary


def test_conjugate_faces():
    sq = square()
    q = polar(sq)
    edge = sq.face_of_point(vec(1, 0))
    ce = conjugate_face(sq, edge)
    assert {q.vertices[i] for i in ce.vertex_indices} == {vec(1, 0)}
    vtx = sq.face_of_point(vec(1, 1))
    cv = conjugate_face(sq, vtx)
    assert {q.vertices[i] for i in cv.vertex_indices} == {vec(1, 0), vec(0, 1)}
    empty = conjugate_face(sq, sq.make_face(frozenset()))
    assert len(empty.vertex_indices) == len(q.vertices)


def test_pos_iso_check():
    rep = pos_iso_check(square())
    assert rep.passed and rep.source_size == rep.target_size == 10
    rep = pos_iso_check(cube())
    assert rep.passed and rep.source_size == 28
    one_dim = Polytope((vec(-1,), vec(1,)))
    assert pos_iso_check(one_dim).passed


def test_project_polytope():
    tri = triangle()
    q = project_polytope(tri, [vec(1, 0)])
    assert set(q.vertices) == {vec(0, 0), vec(2, 0)}
    c = cube()
    z = project_polytope(c, [unit(3, 2)])
    assert set(z.vertices) == {vec(0, 0, -1), vec(0, 0, 1)}
    sq = square()
    assert set(project_polytope(sq, [vec(1, 0), vec(0, 1)]).vertices) == set(sq.vertices)


def test_lift_face_examples():
    tri = triangle()
    q = project_polytope(tri, [vec(1, 0)])
    corner = q.face_of_point(vec(0, 0))
    lifted = lift_face(tri, [vec(1, 0)], corner)
    assert tri.face_points(lifted) == [vec(0, 0)]
    top = q.make_face(frozenset(range(len(q.vertices))))
    assert len(lift_face(tri, [vec(1, 0)], top).vertex_indices) == 3
    assert lift_face(tri, [vec(1, 0)], q.make_face(frozenset())).vertex_indices == ()
    from facelat.polytope import PolyFace
    with pytest.raises(NotAFace):
        lift_face(tri, [vec(1, 0)], PolyFace((0, 2), 1))


def test_lifted_lattices_triangle():
    tri = triangle()
    lifted, lifted_perp, rep = lifted_face_lattices(tri, [vec(1, 0)])
    assert rep.passed, rep.details
    assert len(lifted) == 4
    keys = {f.key for f in lifted.elements}
    assert (0, 1) not in keys  # the bottom edge never lifts to itself
    assert (0,) in keys and (1,) in keys  # its corners do


def test_lifted_lattices_square_and_full_space():
    sq = square()
    lifted, _, rep = lifted_face_lattices(sq, [vec(1, 0)])
    assert rep.passed and len(lifted) == 4
    lifted_full, _, rep2 = lifted_face_lattices(triangle(), [vec(1, 0), vec(0, 1)])
    assert rep2.passed and len(lifted_full) == len(face_lattice(triangle()))


def test_cylinder_normal_check():
    sq = square()
    r = cylinder_normal_check(sq, [vec(1, 0)], vec(1, 1))
    assert r.passed
    assert r.projected_cone == pos_hull([vec(1, 0), vec(0, 1), vec(0, -1)])
    r = cylinder_normal_check(sq, [vec(1, 0)], vec(0, 0))
    assert r.passed and r.projected_cone == subspace_cone([vec(0, 1)], 2)
    with pytest.raises(PointNotInBody):
        cylinder_normal_check(sq, [vec(1, 0)], vec(3, 0))
    c = cube()
    for basis in ([unit(3, 0)], [unit(3, 0), unit(3, 1)]):
        for v in c.vertices:
            assert cylinder_normal_check(c, basis, v).passed


def test_sharp_relations():
    sq = square()
    assert is_sharp_normal(sq, vec(1, 1))
    assert is_sharp_normal(sq, vec(1, 0))
    for x in sq.vertices:
        assert is_sharp_exposed(sq, x)
    assert is_sharp_exposed(sq, vec(0, 0))
    with pytest.raises(ZeroDirection):
        is_sharp_normal(sq, vec(0, 0))
    with pytest.raises(PointNotInBody):
        is_sharp_exposed(sq, vec(5, 5))


def test_atom_decompositions():
    c = cube()
    corner = c.face_of_point(vec(1, 1, 1))
    n = normal_cone(c, corner)
    atoms = atom_decomposition(c, n)
    assert len(atoms) == 3 and all(a.cone_dim == 1 for a in atoms)
    sq = square()
    quadrant = normal_cone(sq, sq.face_of_point(vec(1, 1)))
    assert len(atom_decomposition(sq, quadrant)) == 2
    ray = normal_cone(sq, sq.face_of_point(vec(1, 0)))
    assert atom_decomposition(sq, ray) == [ray]


def test_coatom_decompositions():
    c = cube()
    corner = c.face_of_point(vec(1, 1, 1))
    co = coatom_decomposition(c, corner)
    assert len(co) == 3 and all(f.dim == 2 for f in co)
    sq = square()
    vtx = sq.face_of_point(vec(1, 1))
    co = coatom_decomposition(sq, vtx)
    assert len(co) == 2 and all(f.dim == 1 for f in co)
    edge = sq.face_of_point(vec(1, 0))
    assert coatom_decomposition(sq, edge) == [edge]


def test_dual_coatom_bound_on_normal_lattice():
    # the facet-normal ray decomposes within the dual bound dim(F)+1 = 3
    c = cube()
    facet = c.face_of_point(vec(0, 0, 1))
    ray = normal_cone(c, facet)
    nl = normal_cone_lattice(c)
    idx = nl.index_of((ray.rays, ray.lineality))
    subset = decompose_by_coatoms(nl, idx, facet.dim + 1)
    assert subset is not None and len(subset) <= facet.dim + 1


def test_minkowski_atom_check():
    sq = square()
    edge = sq.face_of_point(vec(1, 0))
    rep = minkowski_atom_check(sq, edge)
    assert rep.passed and len(rep.atoms) == 2
    vtx = sq.face_of_point(vec(1, 1))
    rep = minkowski_atom_check(sq, vtx)
    assert rep.passed and len(rep.atoms) == 1
    c = cube()
    facet = c.face_of_point(vec(0, 0, 1))
    rep = minkowski_atom_check(c, facet)
    assert rep.passed and len(rep.atoms) <= 3
