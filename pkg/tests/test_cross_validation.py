"""Randomized cross-checks between independent computation routes.

Random rational polytopes must give the same answers through the brute-force
face oracle and the supporting-hyperplane route, and random convex polygons
must give the same cones through the planar machinery and the polytope
machinery.
"""

from fractions import Fraction as F
from functools import cmp_to_key

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from facelat.exactgeom import cross2, in_ri_conv_hull, pos_hull, vec, vsub
from facelat.lattice import lattice_map, verify_isomorphism
from facelat.planar import (Cone2, FaceDescriptor, PlanarBody, Segment,
                            compass_directions, exposed_face, face_at,
                            normal_cone_at, polar_planar)
from facelat.polytope import (ConeElement, Polytope, exposed_face_lattice,
                              extreme_points, face_lattice, normal_cone,
                              normal_cone_lattice, polar, support,
                              touching_cone_lattice)

coord = st.integers(min_value=-3, max_value=3)


def build_polytope(raw_points):
    pts = extreme_points([vec(*p) for p in raw_points])
    assume(pts)
    return Polytope(tuple(pts))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(coord, coord), min_size=1, max_size=6, unique=True))
def test_random_2d_face_routes_agree(raw):
    p = build_polytope(raw)
    brute = {f.key for f in face_lattice(p).elements}
    hyper = {f.key for f in exposed_face_lattice(p).elements}
    assert brute == hyper


@settings(max_examples=12, deadline=None)
@given(st.lists(st.tuples(coord, coord, coord), min_size=1, max_size=6,
                unique=True))
def test_random_3d_lattices_consistent(raw):
    p = build_polytope(raw)
    fl = exposed_face_lattice(p)
    nl = normal_cone_lattice(p)
    tl = touching_cone_lattice(p)
    assert {e.key for e in nl.elements} == {e.key for e in tl.elements}
    if len(p.vertices) >= 2:
        rep = verify_isomorphism(lattice_map(
            fl, nl, lambda f: ConeElement(normal_cone(p, f)), "antitone"))
        assert rep.passed, rep.failures


def ccw_polygon(raw_points):
    """Extreme points ordered counterclockwise around the centroid, exactly."""
    pts = extreme_points([vec(*p) for p in raw_points])
    assume(len(pts) >= 3)
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)

    def half(p):
        dx, dy = p[0] - cx, p[1] - cy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(a, b):
        ha, hb = half(a), half(b)
        if ha != hb:
            return -1 if ha < hb else 1
        c = cross2(vsub(a, (cx, cy)), vsub(b, (cx, cy)))
        return -1 if c > 0 else (1 if c < 0 else 0)

    ordered = sorted(pts, key=cmp_to_key(cmp))
    feats = tuple(Segment(ordered[i], ordered[(i + 1) % len(ordered)])
                  for i in range(len(ordered)))
    n = len(feats)
    return PlanarBody(feats, (True,) * n, (True,) * n), ordered


def cone2_as_polycone(c: Cone2):
    return pos_hull(c.generators(), 2) if c.generators() else pos_hull([], 2)


@settings(max_examples=20, deadline=None)
@given(st.lists(st.tuples(coord, coord), min_size=3, max_size=7, unique=True))
def test_random_polygons_agree_across_modules(raw):
    body, ordered = ccw_polygon(raw)
    p = Polytope(tuple(sorted(ordered)))
    # vertex normal cones agree
    for v in ordered:
        c2 = normal_cone_at(body, FaceDescriptor.vertex(v))
        c3 = normal_cone(p, p.face_of_point(v))
        assert cone2_as_polycone(c2) == c3
    # edge normal cones agree
    for i, f in enumerate(body.features):
        c2 = normal_cone_at(body, FaceDescriptor.edge(i))
        mid = vec((f.start[0] + f.end[0]) / 2, (f.start[1] + f.end[1]) / 2)
        c3 = normal_cone(p, p.face_of_point(mid))
        assert cone2_as_polycone(c2) == c3
    # exposed faces agree on a spread of directions
    for u in compass_directions(24):
        fd = exposed_face(body, u)
        _, pf = support(p, u)
        pts = {p.vertices[i] for i in pf.vertex_indices}
        if fd.tag == "vertex":
            assert pts == {fd.point}
        else:
            feat = body.features[fd.feature]
            assert pts == {feat.start, feat.end}


@settings(max_examples=20, deadline=None)
@given(st.lists(st.tuples(coord, coord), min_size=3, max_size=7, unique=True))
def test_random_polygon_polars_agree_across_modules(raw):
    body, ordered = ccw_polygon(raw)
    assume(in_ri_conv_hull(list(ordered), vec(0, 0)))
    p = Polytope(tuple(sorted(ordered)))
    q = polar(p)
    mouse = polar_planar(body)
    assert set(mouse.junctions) == set(q.vertices)
    # interior points of the polygon land in the whole-body face
    assert face_at(body, vec(0, 0)) == FaceDescriptor.whole()
