from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from facelat.exactgeom import (aff_hull, cone_faces,
                               cone_from_hrep, dual_cone, full_space,
                               hull_weight_support, intersect_cones, kernel_basis,
                               orth_complement, pos_hull, primitive,
                               project_onto, ri_contains, rref, simplex_max,
                               span_basis, subspace_cone, vec, zero_cone)


def test_primitive_scaling():
    assert primitive(vec("2/3", "4/3")) == vec(1, 2)
    assert primitive(vec(-2, 4)) == vec(-1, 2)
    with pytest.raises(ValueError):
        primitive(vec(0, 0))


def test_rref_and_kernel():
    rows = [vec(1, 2, 3), vec(2, 4, 6), vec(0, 0, 1)]
    red, piv = rref(rows)
    assert piv == [0, 2] and len(red) == 2
    ker = kernel_basis([vec(1, 0, 0)], 3)
    assert ker == (vec(0, 1, 0), vec(0, 0, 1))
    assert kernel_basis([], 2) == (vec(1, 0), vec(0, 1))


def test_span_basis_is_canonical():
    a = span_basis([vec(1, 1), vec(2, 2), vec(1, 0)])
    b = span_basis([vec(3, 0), vec(0, "1/2")])
    assert a == b == (vec(1, 0), vec(0, 1))


def test_pos_hull_quadrant_drops_interior_generator():
    k = pos_hull([vec(1, 0), vec(1, 1), vec(0, 1)])
    assert k.rays == (vec(0, 1), vec(1, 0))
    assert k.lineality == ()


def test_pos_hull_halfplane_recognizes_lineality():
    k = pos_hull([vec(1, 0), vec(-1, 0), vec(0, 1)])
    assert k.lineality == (vec(1, 0),)
    assert k.rays == (vec(0, 1),)


def test_pos_hull_of_nothing_is_zero_cone():
    k = pos_hull([], 2)
    assert k == zero_cone(2)
    assert k.contains(vec(0, 0)) and not k.contains(vec(1, 0))


def test_cone_faces_counts():
    quadrant = pos_hull([vec(1, 0), vec(0, 1)])
    assert len(cone_faces(quadrant)) == 4
    halfplane = pos_hull([vec(1, 0), vec(-1, 0), vec(0, 1)])
    assert len(cone_faces(halfplane)) == 2
    assert len(cone_faces(full_space(2))) == 1
    corner = pos_hull([vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)])
    assert len(cone_faces(corner)) == 8  # zero, 3 rays, 3 sectors, itself


def test_cone_faces_closed_under_intersection():
    k = pos_hull([vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)])
    faces = cone_faces(k)
    keys = {(f.rays, f.lineality) for f in faces}
    for a in faces:
        for b in faces:
            i = intersect_cones(a, b)
            assert (i.rays, i.lineality) in keys
        for sub in cone_faces(a):
            assert (sub.rays, sub.lineality) in keys


def test_cross_section_spans_faces():
    # pointed cone: each face is the positive hull of its cross-section slice
    k = pos_hull([vec(1, 0, 0), vec(1, 2, 0), vec(1, 0, 3)])
    w = vec(1, 0, 0)
    for f in cone_faces(k):
        if not f.rays:
            continue
        section = [(r, sum(a * b for a, b in zip(w, r))) for r in f.rays]
        pts = [tuple(c / s for c in r) for r, s in section]
        assert pos_hull(pts, 3) == f


def test_ri_membership():
    from facelat.errors import DimensionMismatch
    quadrant = pos_hull([vec(1, 0), vec(0, 1)])
    assert ri_contains(quadrant, vec(1, 1))
    assert not ri_contains(quadrant, vec(1, 0))
    assert ri_contains([vec(0, 0), vec(2, 0)], vec(1, 0))
    assert not ri_contains([vec(0, 0), vec(2, 0)], vec(0, 0))
    with pytest.raises(DimensionMismatch):
        ri_contains(quadrant, vec(1, 0, 0))
    with pytest.raises(DimensionMismatch):
        ri_contains([vec(0, 0), vec(2, 0)], vec(1, 0, 0))


def test_ri_intersection_formula():
    # a point interior to two cones is interior to their intersection
    a = pos_hull([vec(1, 0), vec(0, 1)])
    b = pos_hull([vec(1, 1), vec(-1, 1)])
    x = vec(0, 1)
    assert not a.ri_contains(x) or True
    x = vec("1/4", 1)
    assert a.ri_contains(x) and b.ri_contains(x)
    assert intersect_cones(a, b).ri_contains(x)


def test_projection_examples():
    assert project_onto([vec(1, 0)], vec(3, 4)) == vec(3, 0)
    assert project_onto([vec(1, 1)], vec(1, 0)) == vec(F(1, 2), F(1, 2))
    full = [vec(1, 0), vec(0, 1)]
    assert project_onto(full, vec(7, -2)) == vec(7, -2)


def test_intersect_orth_aff():
    quadrant = pos_hull([vec(1, 0), vec(0, 1)])
    lower = pos_hull([vec(1, 0), vec(-1, 0), vec(0, -1)])
    assert intersect_cones(quadrant, lower) == pos_hull([vec(1, 0)])
    assert orth_complement([vec(1, 0)], 2) == (vec(0, 1),)
    aff = aff_hull([vec(0, 0), vec(1, 0), vec(0, 1)])
    assert aff.dim == 2
    assert aff_hull([vec(2, 2)]).dim == 0


def test_dual_cone():
    quadrant = pos_hull([vec(1, 0), vec(0, 1)])
    assert dual_cone(quadrant) == pos_hull([vec(-1, 0), vec(0, -1)])
    assert dual_cone(zero_cone(2)) == full_space(2)
    assert dual_cone(full_space(2)) == zero_cone(2)
    line = subspace_cone([vec(1, 0)], 2)
    assert dual_cone(line) == subspace_cone([vec(0, 1)], 2)


def test_cone_from_hrep_quadrant():
    k = cone_from_hrep(span_basis([vec(1, 0), vec(0, 1)]),
                       [vec(-1, 0), vec(0, -1)], 2)
    assert k == pos_hull([vec(1, 0), vec(0, 1)])


def test_simplex_basics():
    status, val, x = simplex_max([F(3), F(2)],
                                 [[F(1), F(1)]], [F(4)])
    assert status == "optimal" and val == 12
    status, _, _ = simplex_max([F(1)], [[F(1)], [F(1)]], [F(1), F(2)])
    assert status == "infeasible"


def test_hull_weight_support_identifies_carrier_faces():
    sq = [vec(-1, -1), vec(1, -1), vec(1, 1), vec(-1, 1)]
    assert hull_weight_support(sq, vec(0, 0)) == {0, 1, 2, 3}
    assert hull_weight_support(sq, vec(1, 0)) == {1, 2}
    assert hull_weight_support(sq, vec(1, 1)) == {2}
    assert hull_weight_support(sq, vec(2, 0)) == set()


coord = st.integers(min_value=-3, max_value=3)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(coord, coord), min_size=1, max_size=5))
def test_pos_hull_idempotent(gens):
    k = pos_hull([vec(*g) for g in gens], 2)
    assert pos_hull(k.generators(), 2) == k


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(coord, coord, coord), min_size=1, max_size=5))
def test_dual_dual_is_identity(gens):
    k = pos_hull([vec(*g) for g in gens], 3)
    assert dual_cone(dual_cone(k)) == k


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(coord, coord), min_size=1, max_size=6),
       st.tuples(coord, coord))
def test_lp_membership_agrees_with_cone_membership(gens, point):
    vecs = [vec(*g) for g in gens]
    x = vec(*point)
    k = pos_hull(vecs, 2)
    status, _, _ = simplex_max(
        [F(0)] * len(vecs),
        [[v[0] for v in vecs], [v[1] for v in vecs]], list(x))
    assert (status == "optimal") == k.contains(x)
