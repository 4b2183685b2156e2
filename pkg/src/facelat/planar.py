"""Exact queries on planar convex bodies bounded by segments and circular arcs.

Bodies may be non-closed: whole boundary features and junction vertices can be
deleted as long as the remaining point set stays convex.  This is the regime
where non-exposed faces and touching cones that are not normal cones occur.

All decisions reduce to sign tests of rational cross/dot products or to exact
comparisons of values q + s*sqrt(m) with rational q, s, m, so arcs only need
rational centers and squared radii, with endpoints satisfying the circle
equation exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import isqrt

from .errors import (HypothesisFailed, NotAFace, OriginNotInterior,
                     PointNotInBody, UndefinedTouchingCone,
                     UnsupportedArcCenter, ZeroDirection)
from .exactgeom import (Vec, cross2, dot, is_zero, perp2, primitive, vadd,
                        vneg, vscale, vsub)
from .lattice import FiniteLattice, build_lattice


# ---------------------------------------------------------------------------
# exact values of the form q + s*sqrt(m)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadVal:
    """Exact number q + s*sqrt(m) with rational q, m >= 0 and s >= 0."""

    q: Fraction
    s: Fraction = Fraction(0)
    m: Fraction = Fraction(0)

    def __post_init__(self):
        if self.s < 0 or self.m < 0:
            raise ValueError("QuadVal stores the radical part with s, m >= 0")

    def is_rational(self) -> bool:
        return self.s == 0 or self.m == 0

    def rational(self) -> Fraction:
        assert self.is_rational()
        return self.q


def _sign_p_minus_q_sqrt(p: Fraction, qq: Fraction, m: Fraction) -> int:
    """Sign of p - qq*sqrt(m) for qq >= 0, m >= 0."""
    if qq == 0 or m == 0:
        return (p > 0) - (p < 0)
    if p <= 0:
        return -1 if (p < 0 or m > 0) else 0
    d = p * p - qq * qq * m
    return (d > 0) - (d < 0)


def quad_compare(a: QuadVal, b: QuadVal) -> int:
    """Exact three-way comparison of two q + s*sqrt(m) values."""
    d = a.q - b.q
    s1s, s2s = a.s * a.s * a.m, b.s * b.s * b.m
    if s1s == s2s:
        return (d > 0) - (d < 0)
    if s1s > s2s:
        # X := a.s*sqrt(a.m) - b.s*sqrt(b.m) > 0; sign(d + X)
        if d >= 0:
            return 1
        p = s1s + s2s - d * d
        return _sign_p_minus_q_sqrt(p, 2 * a.s * b.s, a.m * b.m)
    return -quad_compare(b, a)


def sqrt_exact(x: Fraction) -> Fraction | None:
    """Rational square root of x, or None when x is not a perfect square."""
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


# ---------------------------------------------------------------------------
# two-dimensional cones
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cone2:
    """Canonical 2D convex cone: zero, ray, sector (< pi), halfplane, line, plane.

    Sectors store their boundary directions in counterclockwise order; rays
    and lines store primitive directions, halfplanes their inner normal.
    """

    kind: str
    d1: Vec | None = None
    d2: Vec | None = None

    @staticmethod
    def zero() -> "Cone2":
        return Cone2("zero")

    @staticmethod
    def ray(d: Vec) -> "Cone2":
        return Cone2("ray", primitive(d))

    @staticmethod
    def sector(a: Vec, b: Vec) -> "Cone2":
        a, b = primitive(a), primitive(b)
        c = cross2(a, b)
        if c == 0:
            if dot(a, b) > 0:
                return Cone2("ray", a)
            raise ValueError("sector boundary directions must span < pi")
        return Cone2("sector", a, b) if c > 0 else Cone2("sector", b, a)

    @staticmethod
    def line(d: Vec) -> "Cone2":
        p = primitive(d)
        lead = next(x for x in p if x != 0)
        return Cone2("line", p if lead > 0 else vneg(p))

    @staticmethod
    def halfplane(inner_normal: Vec) -> "Cone2":
        return Cone2("halfplane", primitive(inner_normal))

    @staticmethod
    def plane() -> "Cone2":
        return Cone2("plane")

    @property
    def dim(self) -> int:
        return {"zero": 0, "ray": 1, "line": 1, "sector": 2,
                "halfplane": 2, "plane": 2}[self.kind]

    @property
    def key(self):
        return (self.kind, self.d1, self.d2)

    def label(self) -> str:
        if self.kind == "zero":
            return "{0}"
        if self.kind == "ray":
            return f"ray({self.d1[0]},{self.d1[1]})"
        if self.kind == "sector":
            return (f"sector(({self.d1[0]},{self.d1[1]}),"
                    f"({self.d2[0]},{self.d2[1]}))")
        if self.kind == "line":
            return f"line({self.d1[0]},{self.d1[1]})"
        if self.kind == "halfplane":
            return f"halfplane({self.d1[0]},{self.d1[1]})"
        return "plane"

    def contains(self, u: Vec) -> bool:
        if is_zero(u):
            return True
        if self.kind == "zero":
            return False
        if self.kind == "plane":
            return True
        if self.kind == "ray":
            return cross2(self.d1, u) == 0 and dot(self.d1, u) > 0
        if self.kind == "line":
            return cross2(self.d1, u) == 0
        if self.kind == "halfplane":
            return dot(self.d1, u) >= 0
        return cross2(self.d1, u) >= 0 and cross2(u, self.d2) >= 0

    def ri_contains(self, u: Vec) -> bool:
        if self.kind == "zero":
            return is_zero(u)
        if is_zero(u):
            return False
        if self.kind in ("ray", "line"):
            return self.contains(u)
        if self.kind == "plane":
            return True
        if self.kind == "halfplane":
            return dot(self.d1, u) > 0
        return cross2(self.d1, u) > 0 and cross2(u, self.d2) > 0

    def ri_vector(self) -> Vec | None:
        if self.kind == "zero":
            return None
        if self.kind in ("ray", "line"):
            return self.d1
        if self.kind == "plane":
            return (Fraction(1), Fraction(0))
        if self.kind == "halfplane":
            return self.d1
        return vadd(self.d1, self.d2)

    def generators(self) -> list[Vec]:
        if self.kind == "zero":
            return []
        if self.kind == "ray":
            return [self.d1]
        if self.kind == "line":
            return [self.d1, vneg(self.d1)]
        if self.kind == "sector":
            return [self.d1, self.d2]
        if self.kind == "halfplane":
            p = perp2(self.d1)
            return [p, vneg(p), self.d1]
        return [(Fraction(1), Fraction(0)), (Fraction(-1), Fraction(0)),
                (Fraction(0), Fraction(1)), (Fraction(0), Fraction(-1))]

    def subset_of(self, other: "Cone2") -> bool:
        return all(other.contains(g) for g in self.generators())

    def faces(self) -> list["Cone2"]:
        """All nonempty faces of this cone."""
        if self.kind in ("zero", "plane"):
            return [self]
        if self.kind == "ray":
            return [Cone2.zero(), self]
        if self.kind == "line":
            return [self]
        if self.kind == "halfplane":
            return [Cone2.line(perp2(self.d1)), self]
        return [Cone2.zero(), Cone2.ray(self.d1), Cone2.ray(self.d2), self]

    def face_with_in_ri(self, u: Vec) -> "Cone2":
        """The face holding u in its relative interior."""
        for f in self.faces():
            if f.ri_contains(u):
                return f
        raise ValueError(f"{u} is not in the cone")


# ---------------------------------------------------------------------------
# boundary features and bodies
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Segment:
    start: Vec
    end: Vec

    @property
    def kind(self) -> str:
        return "segment"

    @cached_property
    def direction(self) -> Vec:
        return vsub(self.end, self.start)

    @cached_property
    def outward_normal(self) -> Vec:
        # boundary runs counterclockwise, so the outward side is to the right
        d = self.direction
        return primitive((d[1], -d[0]))

    def normal_at(self, p: Vec) -> Vec:
        return self.outward_normal


@dataclass(frozen=True)
class Arc:
    """Counterclockwise circular arc from start to end around center."""

    center: Vec
    radius_sq: Fraction
    start: Vec
    end: Vec

    @property
    def kind(self) -> str:
        return "arc"

    def normal_at(self, p: Vec) -> Vec:
        return primitive(vsub(p, self.center))

    @cached_property
    def start_radial(self) -> Vec:
        return primitive(vsub(self.start, self.center))

    @cached_property
    def end_radial(self) -> Vec:
        return primitive(vsub(self.end, self.center))

    @cached_property
    def _minor(self) -> bool:
        """True when the angular extent is at most pi."""
        c = cross2(self.start_radial, self.end_radial)
        if c > 0:
            return True
        if c < 0:
            return False
        return dot(self.start_radial, self.end_radial) < 0  # exactly pi

    def wedge_contains(self, d: Vec, strict: bool = False) -> bool:
        """Does the direction d lie in the arc's radial wedge?"""
        u, w = self.start_radial, self.end_radial
        if self._minor:
            if strict:
                return cross2(u, d) > 0 and cross2(d, w) > 0
            return (cross2(u, d) >= 0 and cross2(d, w) >= 0
                    and (dot(u, d) > 0 or dot(w, d) > 0 or cross2(u, d) > 0))
        inside_complement = cross2(w, d) > 0 and cross2(d, u) > 0
        if strict:
            on_boundary = (cross2(u, d) == 0 and dot(u, d) > 0) or (
                cross2(w, d) == 0 and dot(w, d) > 0)
            return not inside_complement and not on_boundary and not is_zero(d)
        return not inside_complement and not is_zero(d)

    def point_on(self, x: Vec, strict: bool = False) -> bool:
        r = vsub(x, self.center)
        if dot(r, r) != self.radius_sq:
            return False
        return self.wedge_contains(r, strict=strict)

    def interior_direction(self) -> Vec:
        """A primitive direction strictly inside the radial wedge."""
        u, w = self.start_radial, self.end_radial
        for cand in (vadd(u, w), vneg(vadd(u, w)), perp2(u), vneg(perp2(u))):
            if not is_zero(cand) and self.wedge_contains(cand, strict=True):
                return primitive(cand)
        raise ValueError("degenerate arc")

    def rational_points(self, count: int = 2) -> list[Vec]:
        """Rational points strictly inside the arc, by rational rotations."""
        out = []
        k = 1
        while len(out) < count and k < 60:
            t = Fraction(1, k + 2)
            c = (1 - t * t) / (1 + t * t)
            s = 2 * t / (1 + t * t)
            for cc, ss in ((c, s), (c, -s)):
                base = vsub(self.start, self.center)
                p = (base[0] * cc - base[1] * ss, base[0] * ss + base[1] * cc)
                x = vadd(self.center, p)
                if self.point_on(x, strict=True) and x not in out:
                    out.append(x)
            k += 1
        return out[:count]


Feature = Segment | Arc


@dataclass(frozen=True)
class PlanarBody:
    """Convex region bounded by a counterclockwise cycle of features.

    `feature_closed[i]` records whether the open feature (its relative
    interior) belongs to the body; `vertex_closed[j]` whether the junction
    point starting feature j does.  Deletions must leave a convex set, which
    reduces to: an open segment feature may keep at most one of its endpoints.
    """

    features: tuple[Feature, ...]
    feature_closed: tuple[bool, ...]
    vertex_closed: tuple[bool, ...]

    def __post_init__(self):
        n = len(self.features)
        if n < 2:
            raise ValueError("a planar body needs at least two boundary features")
        if len(self.feature_closed) != n or len(self.vertex_closed) != n:
            raise ValueError("flag lists must match the feature count")
        for i, f in enumerate(self.features):
            g = self.features[(i + 1) % n]
            if f.end != g.start:
                raise ValueError(f"features {i} and {(i + 1) % n} do not share an endpoint")
            if isinstance(f, Segment) and f.start == f.end:
                raise ValueError("zero-length segment")
            if isinstance(f, Arc):
                for p in (f.start, f.end):
                    r = vsub(p, f.center)
                    if dot(r, r) != f.radius_sq:
                        raise ValueError("arc endpoint is not exactly on the circle")
                if f.start == f.end:
                    raise ValueError("full-circle arcs must be split in two")
        for j in range(n):
            prev = self.features[j - 1]
            nxt = self.features[j]
            p = nxt.start
            n_prev, n_next = prev.normal_at(p), nxt.normal_at(p)
            c = cross2(n_prev, n_next)
            if c < 0 or (c == 0 and dot(n_prev, n_next) <= 0):
                raise ValueError(f"boundary is not convex at junction {j}")
            if (c == 0 and isinstance(prev, Segment) and isinstance(nxt, Segment)):
                raise ValueError("consecutive collinear segments must be merged")
        for i, f in enumerate(self.features):
            if not self.feature_closed[i] and isinstance(f, Segment):
                if self.vertex_closed[i] and self.vertex_closed[(i + 1) % len(self.features)]:
                    raise ValueError(
                        "an open segment may keep at most one endpoint (convexity)")

    # -- structure ---------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.features)

    def junction(self, j: int) -> Vec:
        return self.features[j % self.n].start

    @cached_property
    def junctions(self) -> tuple[Vec, ...]:
        return tuple(self.junction(j) for j in range(self.n))

    def junction_present(self, j: int) -> bool:
        return self.vertex_closed[j % self.n]

    def junction_normals(self, j: int) -> tuple[Vec, Vec]:
        p = self.junction(j)
        return (self.features[(j - 1) % self.n].normal_at(p),
                self.features[j % self.n].normal_at(p))

    def junction_cone(self, j: int) -> Cone2:
        n_prev, n_next = self.junction_normals(j)
        if cross2(n_prev, n_next) == 0:
            return Cone2.ray(n_prev)
        return Cone2.sector(n_prev, n_next)

    def is_closed(self) -> bool:
        return all(self.feature_closed) and all(self.vertex_closed)

    # -- membership --------------------------------------------------------

    def closure_contains(self, x: Vec) -> bool:
        for f in self.features:
            if isinstance(f, Segment):
                n = f.outward_normal
                if dot(n, x) > dot(n, f.start):
                    return False
            else:
                d = vsub(x, f.center)
                if f.wedge_contains(d) and dot(d, d) > f.radius_sq:
                    return False
                for endpoint in (f.start, f.end):
                    rad = f.normal_at(endpoint)
                    if dot(rad, vsub(x, endpoint)) > 0:
                        return False
        return True

    def locate(self, x: Vec):
        """('outside'|'interior'|('junction',j)|('segment',i)|('arc',i))."""
        for j in range(self.n):
            if x == self.junction(j):
                return ("junction", j)
        for i, f in enumerate(self.features):
            if isinstance(f, Segment):
                d = f.direction
                rel = vsub(x, f.start)
                if cross2(d, rel) == 0:
                    t = dot(rel, d)
                    if 0 < t < dot(d, d):
                        return ("segment", i)
            else:
                if f.point_on(x, strict=True):
                    return ("arc", i)
        return "interior" if self.closure_contains(x) else "outside"

    def contains(self, x: Vec) -> bool:
        loc = self.locate(x)
        if loc == "outside":
            return False
        if loc == "interior":
            return True
        kind, i = loc
        if kind == "junction":
            return self.junction_present(i)
        return self.feature_closed[i]


# ---------------------------------------------------------------------------
# face descriptors
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FaceDescriptor:
    """Symbolic identity of a face of a planar body.

    Arc-point faces are keyed by (feature, primitive radial direction); the
    rational point is carried when it exists (most support points on arcs
    of non-square radius are irrational).  Equality is by canonical key, so
    descriptors agree whether or not the optional point was computed.
    """

    tag: str  # empty | vertex | edge | arcpoint | whole
    feature: int | None = None
    point: Vec | None = None
    direction: Vec | None = None

    def __eq__(self, other):
        return isinstance(other, FaceDescriptor) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @staticmethod
    def empty() -> "FaceDescriptor":
        return FaceDescriptor("empty")

    @staticmethod
    def whole() -> "FaceDescriptor":
        return FaceDescriptor("whole")

    @staticmethod
    def vertex(point: Vec) -> "FaceDescriptor":
        return FaceDescriptor("vertex", point=point)

    @staticmethod
    def edge(feature: int) -> "FaceDescriptor":
        return FaceDescriptor("edge", feature=feature)

    @staticmethod
    def arc_point(feature: int, direction: Vec, point: Vec | None = None
                  ) -> "FaceDescriptor":
        return FaceDescriptor("arcpoint", feature=feature, point=point,
                              direction=primitive(direction))

    @property
    def key(self):
        if self.tag == "vertex":
            return ("vertex", self.point)
        if self.tag == "edge":
            return ("edge", self.feature)
        if self.tag == "arcpoint":
            return ("arcpoint", self.feature, self.direction)
        return (self.tag,)

    @property
    def dim(self) -> int:
        return {"empty": -1, "vertex": 0, "arcpoint": 0, "edge": 1, "whole": 2}[self.tag]

    def label(self) -> str:
        if self.tag == "vertex":
            return f"vertex({self.point[0]},{self.point[1]})"
        if self.tag == "edge":
            return f"edge#{self.feature}"
        if self.tag == "arcpoint":
            if self.point is not None:
                return f"arcpt#{self.feature}({self.point[0]},{self.point[1]})"
            return f"arcpt#{self.feature}[dir ({self.direction[0]},{self.direction[1]})]"
        return self.tag


def face_at(body: PlanarBody, x: Vec) -> FaceDescriptor:
    """The unique face with x in its relative interior."""
    loc = body.locate(x)
    if loc == "outside":
        raise PointNotInBody(f"{x} is outside the body")
    if loc == "interior":
        return FaceDescriptor.whole()
    kind, i = loc
    if kind == "junction":
        if not body.junction_present(i):
            raise PointNotInBody(f"junction {i} is deleted")
        return FaceDescriptor.vertex(x)
    if not body.feature_closed[i]:
        raise PointNotInBody(f"feature {i} is deleted")
    if kind == "segment":
        return FaceDescriptor.edge(i)
    arc = body.features[i]
    return FaceDescriptor.arc_point(i, vsub(x, arc.center), x)


def _junction_index(body: PlanarBody, point: Vec) -> int:
    for j in range(body.n):
        if body.junction(j) == point:
            return j
    raise NotAFace(f"{point} is not a junction")


def normal_cone_at(body: PlanarBody, f: FaceDescriptor) -> Cone2:
    """Exact normal cone of a nonempty face (the empty face maps to the plane)."""
    if f.tag == "empty":
        return Cone2.plane()
    if f.tag == "whole":
        return Cone2.zero()
    if f.tag == "edge":
        feat = body.features[f.feature]
        if not isinstance(feat, Segment) or not body.feature_closed[f.feature]:
            raise NotAFace("edge descriptor must name a present segment feature")
        return Cone2.ray(feat.outward_normal)
    if f.tag == "arcpoint":
        if not body.feature_closed[f.feature]:
            raise NotAFace("arc feature is deleted")
        return Cone2.ray(f.direction)
    j = _junction_index(body, f.point)
    if not body.junction_present(j):
        raise NotAFace("vertex is deleted")
    return body.junction_cone(j)


# ---------------------------------------------------------------------------
# support / exposed faces
# ---------------------------------------------------------------------------

def support_value(body: PlanarBody, u: Vec) -> tuple[QuadVal, FaceDescriptor]:
    """Support value over the closure and the exposed face of the closure."""
    if is_zero(u):
        raise ZeroDirection("support direction must be nonzero")
    best: QuadVal | None = None
    attainers: list[tuple[str, int]] = []
    for j in range(body.n):
        val = QuadVal(dot(u, body.junction(j)))
        c = -1 if best is None else quad_compare(val, best)
        if best is None or c > 0:
            best, attainers = val, [("junction", j)]
        elif c == 0:
            attainers.append(("junction", j))
    for i, f in enumerate(body.features):
        if isinstance(f, Arc) and f.wedge_contains(u, strict=True):
            val = QuadVal(dot(u, f.center), Fraction(1), f.radius_sq * dot(u, u))
            c = quad_compare(val, best)
            if c > 0:
                best, attainers = val, [("arc", i)]
            elif c == 0:
                attainers.append(("arc", i))
    arcs = [a for a in attainers if a[0] == "arc"]
    if arcs:
        assert len(attainers) == 1, "strictly convex arcs admit no support ties"
        i = arcs[0][1]
        f = body.features[i]
        t = sqrt_exact(f.radius_sq / dot(u, u))
        point = vadd(f.center, vscale(t, u)) if t is not None else None
        return best, FaceDescriptor.arc_point(i, u, point)
    junctions = [j for _, j in attainers]
    if len(junctions) == 1:
        return best, FaceDescriptor.vertex(body.junction(junctions[0]))
    assert len(junctions) == 2, "at most one segment can attain the support"
    pts = {body.junction(j) for j in junctions}
    for i, f in enumerate(body.features):
        if isinstance(f, Segment) and {f.start, f.end} == pts:
            return best, FaceDescriptor.edge(i)
    raise AssertionError("two support junctions must bound a segment feature")


def exposed_face(body: PlanarBody, u: Vec) -> FaceDescriptor:
    """Exposed face of the body by u; Empty when the supremum is not attained."""
    _, closure_face = support_value(body, u)
    if closure_face.tag == "vertex":
        j = _junction_index(body, closure_face.point)
        return closure_face if body.junction_present(j) else FaceDescriptor.empty()
    if closure_face.tag == "arcpoint":
        return closure_face if body.feature_closed[closure_face.feature] \
            else FaceDescriptor.empty()
    i = closure_face.feature
    if body.feature_closed[i]:
        return closure_face
    for j in (i, (i + 1) % body.n):
        if body.junction_present(j):
            return FaceDescriptor.vertex(body.junction(j))
    return FaceDescriptor.empty()


def touching_cone(body: PlanarBody, u: Vec) -> tuple[Cone2, bool]:
    """Touching cone of the direction u and whether it is a normal cone."""
    if is_zero(u):
        raise ZeroDirection("touching-cone direction must be nonzero")
    f = exposed_face(body, u)
    if f.tag == "empty":
        raise UndefinedTouchingCone(f"direction {u} exposes the empty face")
    n = normal_cone_at(body, f)
    t = n.face_with_in_ri(u)
    return t, _cone_is_normal(body, t)


def _cone_is_normal(body: PlanarBody, t: Cone2) -> bool:
    if t.kind == "zero" or t.kind == "plane":
        return True
    v = t.ri_vector()
    f = exposed_face(body, v)
    if f.tag == "empty":
        return False
    return normal_cone_at(body, f) == t


def sup_exposed_planar(body: PlanarBody, f: FaceDescriptor) -> FaceDescriptor:
    """Smallest exposed face containing f: the face exposed by any ri normal."""
    if f.tag == "whole":
        return f
    if f.tag == "empty":
        return f
    v = normal_cone_at(body, f).ri_vector()
    return exposed_face(body, v)


def non_exposed_faces(body: PlanarBody) -> list[FaceDescriptor]:
    """The finitely many faces that are not exposed (always vertex faces)."""
    out = []
    for j in range(body.n):
        if not body.junction_present(j):
            continue
        v = FaceDescriptor.vertex(body.junction(j))
        u = body.junction_cone(j).ri_vector()
        if exposed_face(body, u) != v:
            out.append(v)
    return out


def touching_not_normal(body: PlanarBody) -> list[Cone2]:
    """Proper touching cones that are not normal cones (always rays)."""
    out: dict[tuple, Cone2] = {}
    for j in range(body.n):
        if not body.junction_present(j):
            continue
        cone = body.junction_cone(j)
        if cone.kind != "sector":
            continue
        for d in (cone.d1, cone.d2):
            try:
                t, is_norm = touching_cone(body, d)
            except UndefinedTouchingCone:
                continue
            if t.kind == "ray" and not is_norm:
                out[t.key] = t
    return sorted(out.values(), key=lambda c: c.key)


# ---------------------------------------------------------------------------
# 2D structure checks
# ---------------------------------------------------------------------------

def _adjacent_segment_faces(body: PlanarBody, j: int) -> list[int]:
    """Present segment features having junction j as an endpoint."""
    out = []
    for i in (j - 1, j):
        i %= body.n
        f = body.features[i]
        if isinstance(f, Segment) and body.feature_closed[i]:
            out.append(i)
    return out


@dataclass(frozen=True)
class RuleReport:
    passed: bool
    details: tuple[str, ...]


def check_2d_nonexposed_rule(body: PlanarBody) -> RuleReport:
    """Non-exposed faces are exactly the endpoints of a unique 1-dim face.

    Valid only when every touching cone is a normal cone; otherwise the
    hypothesis fails and the rule is not applicable.
    """
    if touching_not_normal(body):
        raise HypothesisFailed("some touching cone is not a normal cone")
    non_exp = {f.key for f in non_exposed_faces(body)}
    details = []
    ok = True
    for j in range(body.n):
        if not body.junction_present(j):
            continue
        v = FaceDescriptor.vertex(body.junction(j))
        ends_one = len(_adjacent_segment_faces(body, j)) == 1
        if (v.key in non_exp) != ends_one:
            ok = False
            details.append(
                f"{v.label()}: non-exposed={v.key in non_exp}, "
                f"unique 1-dim face endpoint={ends_one}")
    return RuleReport(ok, tuple(details))


def singular_points(body: PlanarBody) -> list[Vec]:
    """Boundary points of the body with a two-dimensional normal cone."""
    return [body.junction(j) for j in range(body.n)
            if body.junction_present(j) and body.junction_cone(j).kind == "sector"]


def check_2d_smoothness(body: PlanarBody) -> RuleReport:
    """Each singular point is the intersection of two boundary segments."""
    if touching_not_normal(body):
        raise HypothesisFailed("some touching cone is not a normal cone")
    details = []
    ok = True
    for x in singular_points(body):
        j = _junction_index(body, x)
        if len(_adjacent_segment_faces(body, j)) != 2:
            ok = False
            details.append(f"singular point {x} does not join two segments")
    return RuleReport(ok, tuple(details))


@dataclass(frozen=True)
class CoatomReport:
    hypothesis_ok: bool
    coatoms: tuple[FaceDescriptor, ...]
    is_intersection_of_coatoms: bool
    note: str


def _is_coatom(body: PlanarBody, f: FaceDescriptor) -> bool:
    if f.tag == "edge":
        return True
    if f.tag == "arcpoint":
        return True
    if f.tag == "vertex":
        j = _junction_index(body, f.point)
        return not _adjacent_segment_faces(body, j)
    return False


def coatom_check_planar(body: PlanarBody, f: FaceDescriptor) -> CoatomReport:
    """Is a proper exposed face an intersection of coatoms of the exposed lattice?

    When every touching cone inside its normal cone is normal this must hold;
    without the hypothesis both outcomes occur, and the report says which.
    """
    if f.tag in ("empty", "whole"):
        raise ValueError("check applies to proper exposed faces")
    n = normal_cone_at(body, f)
    v = n.ri_vector()
    if exposed_face(body, v) != f:
        raise NotAFace("face is not exposed")
    hypothesis_ok = all(_cone_is_normal(body, t) for t in n.faces()
                        if t.kind == "ray")
    coatoms: list[FaceDescriptor] = []
    if _is_coatom(body, f):
        coatoms.append(f)
        inter_is_f = True
    elif f.tag == "vertex":
        j = _junction_index(body, f.point)
        edges = [FaceDescriptor.edge(i) for i in _adjacent_segment_faces(body, j)]
        coatoms.extend(edges)
        inter_is_f = len(edges) == 2
    else:
        inter_is_f = False
    note = ""
    if hypothesis_ok and not inter_is_f:
        note = "violates the coatom-intersection theorem"
    elif not hypothesis_ok and inter_is_f:
        note = "coatom intersection holds although the hypothesis fails (no converse)"
    elif not hypothesis_ok:
        note = "sufficient condition only: hypothesis fails and so does the conclusion"
    return CoatomReport(hypothesis_ok, tuple(coatoms), inter_is_f, note)


# ---------------------------------------------------------------------------
# partition of directions by touching cones
# ---------------------------------------------------------------------------

def touching_ray_directions(body: PlanarBody) -> list[Vec]:
    """Primitive directions of all ray touching cones except arc families."""
    dirs: set[Vec] = set()
    for i, f in enumerate(body.features):
        if isinstance(f, Segment) and body.feature_closed[i]:
            dirs.add(f.outward_normal)
    for j in range(body.n):
        if not body.junction_present(j):
            continue
        cone = body.junction_cone(j)
        if cone.kind == "ray":
            dirs.add(cone.d1)
        else:
            dirs.add(cone.d1)
            dirs.add(cone.d2)
    confirmed = []
    for d in sorted(dirs):
        try:
            t, _ = touching_cone(body, d)
        except UndefinedTouchingCone:
            continue
        if t == Cone2.ray(d):
            confirmed.append(d)
    return confirmed


def partition_check_planar(body: PlanarBody, directions: list[Vec]) -> RuleReport:
    """Each direction lies in the relative interior of exactly one touching cone."""
    if not body.is_closed():
        raise HypothesisFailed("partition check requires a closed bounded body")
    rays = touching_ray_directions(body)
    sectors = [body.junction_cone(j) for j in range(body.n)
               if body.junction_cone(j).kind == "sector"]
    details = []
    ok = True
    for u in directions:
        if is_zero(u):
            raise ZeroDirection("partition directions must be nonzero")
        count = sum(1 for d in rays if Cone2.ray(d).ri_contains(u))
        count += sum(1 for s in sectors if s.ri_contains(u))
        for i, f in enumerate(body.features):
            if isinstance(f, Arc) and f.wedge_contains(u, strict=True):
                count += 1
        if count != 1:
            ok = False
            details.append(f"direction {u} lies in {count} touching-cone interiors")
    return RuleReport(ok, tuple(details))


# ---------------------------------------------------------------------------
# polarity
# ---------------------------------------------------------------------------

def polar_planar(body: PlanarBody) -> PlanarBody:
    """Polar body of a closed planar body with the origin interior.

    Origin-centered arcs of squared radius R map to arcs of squared radius
    1/R, segments map to vertices, and vertices to segments of tangent lines.
    """
    if not body.is_closed():
        raise OriginNotInterior("polar bodies are defined for closed bodies")
    if body.locate((Fraction(0), Fraction(0))) != "interior":
        raise OriginNotInterior("the origin must be an interior point")
    for f in body.features:
        if isinstance(f, Arc) and not is_zero(f.center):
            raise UnsupportedArcCenter("arcs must be centered at the origin")

    def anchors(f: Feature) -> tuple[Vec, Vec]:
        if isinstance(f, Segment):
            n = f.outward_normal
            c = dot(n, f.start)
            w = vscale(1 / c, n)
            return w, w
        inv = 1 / f.radius_sq
        return vscale(inv, f.start), vscale(inv, f.end)

    features: list[Feature] = []
    n = body.n
    for i, f in enumerate(body.features):
        if isinstance(f, Arc):
            inv = 1 / f.radius_sq
            features.append(Arc((Fraction(0), Fraction(0)), inv,
                                vscale(inv, f.start), vscale(inv, f.end)))
        g = body.features[(i + 1) % n]
        a = anchors(f)[1]
        b = anchors(g)[0]
        if a != b:
            features.append(Segment(a, b))
    m = len(features)
    return PlanarBody(tuple(features), (True,) * m, (True,) * m)


def gauge_value(body: PlanarBody, u: Vec) -> QuadVal:
    """Exact gauge inf{t > 0 : u/t in body} of a closed body with 0 interior."""
    if is_zero(u):
        raise ZeroDirection("gauge direction must be nonzero")
    best: QuadVal | None = None
    for f in body.features:
        if isinstance(f, Segment):
            n = f.outward_normal
            num = dot(n, u)
            if num > 0:
                val = QuadVal(num / dot(n, f.start))
            else:
                continue
        else:
            d = vsub(u, f.center)  # centers are 0 for supported bodies
            if not f.wedge_contains(d):
                continue
            val = QuadVal(Fraction(0), Fraction(1), dot(u, u) / f.radius_sq)
        if best is None or quad_compare(val, best) > 0:
            best = val
    assert best is not None, "a bounded body bounds every ray"
    return best


# ---------------------------------------------------------------------------
# cone inventory
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConeInventory:
    """Finite summary of the normal/touching cone structure of a planar body.

    Arc features contribute a one-parameter family of radial rays (all of
    them normal cones); those are recorded per feature, not enumerated.
    """

    proper_normal: tuple[Cone2, ...]
    arc_families: tuple[int, ...]
    extra_touching: tuple[Cone2, ...]  # touching cones that are not normal

    @property
    def proper_normal_count(self) -> int:
        return len(self.proper_normal)

    @property
    def proper_touching_count(self) -> int:
        return len(self.proper_normal) + len(self.extra_touching)


def cone_inventory(body: PlanarBody) -> ConeInventory:
    normals: dict[tuple, Cone2] = {}
    families = []
    for i, f in enumerate(body.features):
        if not body.feature_closed[i]:
            continue
        if isinstance(f, Segment):
            c = normal_cone_at(body, FaceDescriptor.edge(i))
            normals[c.key] = c
        else:
            families.append(i)
    for j in range(body.n):
        if body.junction_present(j):
            c = body.junction_cone(j)
            normals[c.key] = c
    extra = touching_not_normal(body)
    return ConeInventory(tuple(sorted(normals.values(), key=lambda c: c.key)),
                         tuple(families), tuple(extra))


# ---------------------------------------------------------------------------
# finite special-face lattice
# ---------------------------------------------------------------------------

def special_faces(body: PlanarBody, exposed_only: bool = False,
                  arc_representatives: int = 1) -> list[FaceDescriptor]:
    """Empty, whole, vertex and edge faces plus representative arc points."""
    out = [FaceDescriptor.empty(), FaceDescriptor.whole()]
    non_exp = {f.key for f in non_exposed_faces(body)} if exposed_only else set()
    for j in range(body.n):
        if body.junction_present(j):
            v = FaceDescriptor.vertex(body.junction(j))
            if v.key not in non_exp:
                out.append(v)
    for i, f in enumerate(body.features):
        if not body.feature_closed[i]:
            continue
        if isinstance(f, Segment):
            out.append(FaceDescriptor.edge(i))
        elif arc_representatives:
            d = f.interior_direction()
            t = sqrt_exact(f.radius_sq / dot(d, d))
            pt = vadd(f.center, vscale(t, d)) if t is not None else None
            out.append(FaceDescriptor.arc_point(i, d, pt))
    return out


def _face_leq(body: PlanarBody, a: FaceDescriptor, b: FaceDescriptor) -> bool:
    if a.key == b.key or a.tag == "empty" or b.tag == "whole":
        return True
    if b.tag == "empty" or a.tag == "whole":
        return False
    if a.tag == "vertex" and b.tag == "edge":
        f = body.features[b.feature]
        return a.point in (f.start, f.end)
    return False


def special_face_lattice(body: PlanarBody, exposed_only: bool = False) -> FiniteLattice:
    """Finite lattice over the special faces (never the full arc-body lattice)."""
    faces = special_faces(body, exposed_only=exposed_only)
    faces.sort(key=lambda f: (f.dim, str(f.key)))
    return build_lattice(faces, lambda a, b: _face_leq(body, a, b))


# ---------------------------------------------------------------------------
# samples for invariant tests
# ---------------------------------------------------------------------------

def sample_boundary_points(body: PlanarBody, per_arc: int = 2) -> list[Vec]:
    """Rational points of the body's boundary: junctions, midpoints, arc points."""
    out = []
    for j in range(body.n):
        if body.junction_present(j):
            out.append(body.junction(j))
    for i, f in enumerate(body.features):
        if not body.feature_closed[i]:
            continue
        if isinstance(f, Segment):
            out.append(vscale(Fraction(1, 2), vadd(f.start, f.end)))
        else:
            out.extend(f.rational_points(per_arc))
    return out


def compass_directions(count: int = 360) -> list[Vec]:
    """Deterministic primitive rational directions spread around the circle."""
    half = count // 2
    out: list[Vec] = []
    for k in range(half):
        t = Fraction(k, half) - 1
        d = (1 - t * t, 2 * t)
        if is_zero(d):
            d = (Fraction(-1), Fraction(0))
        p = primitive(d)
        out.append(p)
        out.append(vneg(p))
    seen = set()
    unique = []
    for d in out:
        if d not in seen:
            seen.add(d)
            unique.append(d)
    return unique
