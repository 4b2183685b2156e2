"""Exact rational linear algebra and polyhedral-cone primitives (ambient dim <= 4).

Everything in this module is computed over `fractions.Fraction`; there is no
floating point anywhere.  Cones are kept in a canonical V-representation
(extreme rays modulo lineality, primitive integer scaling, sorted), so record
equality coincides with geometric equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch

Vec = tuple[Fraction, ...]


# ---------------------------------------------------------------------------
# vector helpers
# ---------------------------------------------------------------------------

def vec(*coords) -> Vec:
    """Build an exact rational vector; accepts ints, Fractions and strings."""
    return tuple(Fraction(c) for c in coords)


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def vscale(t, a: Vec) -> Vec:
    t = Fraction(t)
    return tuple(t * x for x in a)


def dot(a: Vec, b: Vec) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))


def is_zero(a: Vec) -> bool:
    return all(x == 0 for x in a)


def zero(dim: int) -> Vec:
    return (Fraction(0),) * dim


def unit(dim: int, i: int) -> Vec:
    return tuple(Fraction(1 if j == i else 0) for j in range(dim))


def cross2(a: Vec, b: Vec) -> Fraction:
    """z-component of the 2D cross product."""
    return a[0] * b[1] - a[1] * b[0]


def perp2(a: Vec) -> Vec:
    """Rotate a 2D vector by +90 degrees."""
    return (-a[1], a[0])


def primitive(v: Vec) -> Vec:
    """Scale a nonzero vector to coprime integer coordinates, keeping direction."""
    if is_zero(v):
        raise ValueError("zero vector has no primitive form")
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for n in ints:
        g = gcd(g, abs(n))
    return tuple(Fraction(n // g) for n in ints)


def sign_normalized(v: Vec) -> Vec:
    """Primitive form with the first nonzero coordinate positive (line direction)."""
    p = primitive(v)
    lead = next(x for x in p if x != 0)
    return p if lead > 0 else vneg(p)


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------

def rref(rows: Sequence[Vec]) -> tuple[list[Vec], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows: Sequence[Vec]) -> int:
    return len(rref(rows)[0])


def span_basis(vectors: Iterable[Vec]) -> tuple[Vec, ...]:
    """Canonical basis of the span: primitive-scaled RREF rows."""
    rows = [v for v in vectors if not is_zero(v)]
    reduced, _ = rref(rows)
    return tuple(primitive(r) for r in reduced)


def kernel_basis(rows: Sequence[Vec], dim: int) -> tuple[Vec, ...]:
    """Canonical basis of {x : r . x = 0 for all rows r}."""
    reduced, pivots = rref(rows)
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for c in free:
        v = [Fraction(0)] * dim
        v[c] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][c]
        basis.append(tuple(v))
    return span_basis(basis)


def solve_linear(rows: Sequence[Vec], rhs: Sequence[Fraction]) -> Vec | None:
    """One solution of rows . x = rhs, or None if inconsistent."""
    if not rows:
        return None
    dim = len(rows[0])
    aug = [tuple(list(r) + [b]) for r, b in zip(rows, rhs, strict=True)]
    reduced, pivots = rref(aug)
    if dim in pivots:
        return None
    x = [Fraction(0)] * dim
    for i, p in enumerate(pivots):
        x[p] = reduced[i][dim]
    return tuple(x)


def in_span(basis: Sequence[Vec], x: Vec) -> bool:
    if is_zero(x):
        return True
    if not basis:
        return False
    return rank(list(basis) + [x]) == len(basis)


def orth_complement(basis: Sequence[Vec], dim: int) -> tuple[Vec, ...]:
    """Canonical basis of the orthogonal complement of span(basis) in R^dim."""
    return kernel_basis(list(basis), dim)


def subspace_intersection(b1: Sequence[Vec], b2: Sequence[Vec], dim: int) -> tuple[Vec, ...]:
    cons = list(orth_complement(b1, dim)) + list(orth_complement(b2, dim))
    return kernel_basis(cons, dim)


def project_onto(basis: Sequence[Vec], x: Vec) -> Vec:
    """Orthogonal projection of x onto span(basis); x - result is perpendicular."""
    if not basis:
        return zero(len(x))
    gram = [tuple(dot(bi, bj) for bj in basis) for bi in basis]
    rhs = [dot(bi, x) for bi in basis]
    alpha = solve_linear(gram, rhs)
    out = zero(len(x))
    for a, b in zip(alpha, basis):
        out = vadd(out, vscale(a, b))
    return out


@dataclass(frozen=True)
class AffineSubspace:
    """Affine subspace given by a basepoint and a canonical direction basis."""

    basepoint: Vec
    directions: tuple[Vec, ...]

    @property
    def dim(self) -> int:
        return len(self.directions)

    def contains(self, x: Vec) -> bool:
        return in_span(self.directions, vsub(x, self.basepoint))


def aff_hull(points: Sequence[Vec]) -> AffineSubspace:
    if not points:
        raise ValueError("affine hull of no points")
    p0 = points[0]
    return AffineSubspace(p0, span_basis(vsub(p, p0) for p in points[1:]))


# ---------------------------------------------------------------------------
# exact linear programming (small dense simplex, Bland's rule)
# ---------------------------------------------------------------------------

def simplex_max(obj: Sequence[Fraction], a_eq: Sequence[Sequence[Fraction]],
                b_eq: Sequence[Fraction]) -> tuple[str, Fraction | None, Vec | None]:
    """Maximize obj . x subject to a_eq x = b_eq, x >= 0, exactly.

    Returns ("infeasible", None, None), ("unbounded", None, None) or
    ("optimal", value, x).  Bland's rule guarantees termination.
    """
    m, n = len(a_eq), len(obj)
    rows = [[Fraction(v) for v in row] for row in a_eq]
    rhs = [Fraction(v) for v in b_eq]
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]
    # phase 1: artificial variables n..n+m-1
    tab = [rows[i] + [Fraction(1 if j == i else 0) for j in range(m)] + [rhs[i]]
           for i in range(m)]
    basis = [n + i for i in range(m)]
    cost = [Fraction(0)] * n + [Fraction(1)] * m

    def pivot(tab, basis, row, col):
        piv = tab[row][col]
        tab[row] = [v / piv for v in tab[row]]
        for i in range(len(tab)):
            if i != row and tab[i][col] != 0:
                f = tab[i][col]
                tab[i] = [v - f * w for v, w in zip(tab[i], tab[row])]
        basis[row] = col

    def run(tab, basis, cost, ncols):
        while True:
            red = list(cost[:ncols])
            for i, bi in enumerate(basis):
                if cost[bi] != 0:
                    f = cost[bi]
                    red = [r - f * tab[i][j] for j, r in enumerate(red)]
            col = next((j for j in range(ncols) if red[j] < 0), None)
            if col is None:
                return True
            ratios = [(tab[i][-1] / tab[i][col], basis[i], i)
                      for i in range(len(tab)) if tab[i][col] > 0]
            if not ratios:
                return False
            _, _, row = min(ratios)
            pivot(tab, basis, row, col)

    run(tab, basis, cost, n + m)  # run() minimizes `cost`
    if sum(tab[i][-1] for i in range(m) if basis[i] >= n) > 0:
        return "infeasible", None, None
    # drive remaining artificials out of the basis
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tab[i][j] != 0), None)
            if col is not None:
                pivot(tab, basis, i, col)
    keep = [i for i in range(m) if basis[i] < n]
    tab = [tab[i][:n] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    # phase 2: minimize -obj
    cost2 = [-Fraction(v) for v in obj]
    if not run(tab, basis, cost2, n):
        return "unbounded", None, None
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        x[bi] = tab[i][-1]
    value = sum((Fraction(obj[j]) * x[j] for j in range(n)), Fraction(0))
    return "optimal", value, tuple(x)


def in_conv_hull(points: Sequence[Vec], x: Vec) -> bool:
    """Exact membership x in conv(points), by LP feasibility."""
    status, _, _ = simplex_max(
        [Fraction(0)] * len(points),
        _hull_rows(points), list(x) + [Fraction(1)])
    return status == "optimal"


def in_ri_conv_hull(points: Sequence[Vec], x: Vec) -> bool:
    """Exact membership x in ri(conv(points)).

    Uses the characterization of the relative interior of a finitely generated
    hull as the strictly positive convex combinations: maximizes the least
    admissible weight via one LP.
    """
    k = len(points)
    # variables mu_1..mu_k, t  with  lambda_i = mu_i + t
    rows = []
    dim = len(x)
    for d in range(dim):
        rows.append([p[d] for p in points] + [sum(p[d] for p in points)])
    rows.append([Fraction(1)] * k + [Fraction(k)])
    obj = [Fraction(0)] * k + [Fraction(1)]
    status, val, _ = simplex_max(obj, rows, list(x) + [Fraction(1)])
    return status == "optimal" and val > 0


def _hull_rows(points: Sequence[Vec]) -> list[list[Fraction]]:
    dim = len(points[0])
    rows = [[p[d] for p in points] for d in range(dim)]
    rows.append([Fraction(1)] * len(points))
    return rows


def hull_weight_support(points: Sequence[Vec], x: Vec) -> set[int]:
    """Indices that can carry positive weight in some convex combination for x.

    Empty set when x is not in the hull at all.  This is the face oracle used
    by the brute-force face enumeration: the result is the vertex set of the
    unique face containing x in its relative interior.
    """
    rows = _hull_rows(points)
    rhs = list(x) + [Fraction(1)]
    out = set()
    for i in range(len(points)):
        obj = [Fraction(1 if j == i else 0) for j in range(len(points))]
        status, val, _ = simplex_max(obj, rows, rhs)
        if status != "optimal":
            return set()
        if val > 0:
            out.add(i)
    return out


# ---------------------------------------------------------------------------
# polyhedral cones
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PolyCone:
    """Finitely generated convex cone in canonical form.

    `rays` are the extreme-ray generators taken in the orthogonal complement
    of the lineality space, primitive and lexicographically sorted;
    `lineality` is the canonical (RREF) basis of the lineality space.  Two
    cones are equal iff their records are equal.
    """

    dim: int
    rays: tuple[Vec, ...]
    lineality: tuple[Vec, ...]

    @cached_property
    def span(self) -> tuple[Vec, ...]:
        return span_basis(list(self.rays) + list(self.lineality))

    @cached_property
    def facet_normals(self) -> tuple[Vec, ...]:
        """Outer facet normals within span: cone = {x in span : n.x <= 0}."""
        gens = self.generators()
        if not gens:
            return ()
        return _cone_facet_normals(gens, self.span)

    def generators(self) -> list[Vec]:
        gens = list(self.rays)
        for b in self.lineality:
            gens.append(b)
            gens.append(vneg(b))
        return gens

    @property
    def cone_dim(self) -> int:
        return len(self.span)

    @property
    def lineality_dim(self) -> int:
        return len(self.lineality)

    def is_subspace(self) -> bool:
        return not self.rays

    def contains(self, x: Vec) -> bool:
        if is_zero(x):
            return True
        if not in_span(self.span, x):
            return False
        return all(dot(n, x) <= 0 for n in self.facet_normals)

    def ri_contains(self, x: Vec) -> bool:
        if not in_span(self.span, x):
            return False
        return all(dot(n, x) < 0 for n in self.facet_normals)

    def ri_vector(self) -> Vec | None:
        """A vector in the relative interior; None only for the zero cone."""
        v = zero(self.dim)
        for r in self.rays:
            v = vadd(v, r)
        for b in self.lineality:
            v = vadd(v, b)
        return None if is_zero(v) else v

    def is_face_of(self, other: "PolyCone") -> bool:
        return self in cone_faces(other)

    def label(self) -> str:
        if not self.rays and not self.lineality:
            return "{0}"
        parts = []
        if self.lineality:
            parts.append("lin<" + ", ".join(_fmt_vec(b) for b in self.lineality) + ">")
        if self.rays:
            parts.append("pos{" + ", ".join(_fmt_vec(r) for r in self.rays) + "}")
        return " + ".join(parts)


def _fmt_vec(v: Vec) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _cone_facet_normals(gens: Sequence[Vec], span: Sequence[Vec]) -> tuple[Vec, ...]:
    """Brute-force facet normals of pos(gens) inside its span."""
    w = len(span)
    if w == 0:
        return ()
    normals: set[Vec] = set()
    for subset in combinations(range(len(gens)), w - 1):
        # normal in span, orthogonal to the subset
        rows = [tuple(dot(span[i], gens[s]) for i in range(w)) for s in subset]
        ker = kernel_basis(rows, w)
        if len(ker) != 1:
            continue
        n = zero(len(gens[0]))
        for a, b in zip(ker[0], span):
            n = vadd(n, vscale(a, b))
        prods = [dot(n, g) for g in gens]
        if all(p <= 0 for p in prods):
            normals.add(primitive(n))
        elif all(p >= 0 for p in prods):
            normals.add(primitive(vneg(n)))
    return tuple(sorted(normals))


def pos_hull(generators: Iterable[Vec], dim: int | None = None) -> PolyCone:
    """Canonical positive hull; pos() of the empty set is the zero cone."""
    gens = [tuple(Fraction(c) for c in g) for g in generators]
    gens = [g for g in gens if not is_zero(g)]
    if dim is None:
        if not gens:
            raise ValueError("ambient dimension required for an empty generator list")
        dim = len(gens[0])
    if not gens:
        return PolyCone(dim, (), ())
    span = span_basis(gens)
    normals = _cone_facet_normals(gens, span)
    lin = kernel_basis(list(normals), dim) if normals else span
    if normals:
        lin = tuple(b for b in subspace_intersection(lin, span, dim))
    rays: set[Vec] = set()
    spanc = list(orth_complement(span, dim))
    for g in gens:
        r0 = vsub(g, project_onto(lin, g))
        if is_zero(r0):
            continue
        active = [n for n in normals if dot(n, g) == 0]
        ker = kernel_basis(active + spanc, dim)
        if len(ker) == len(lin) + 1:
            rays.add(primitive(r0))
    return PolyCone(dim, tuple(sorted(rays)), lin)


def cone_from_hrep(span: Sequence[Vec], normals: Sequence[Vec], dim: int) -> PolyCone:
    """Cone {x in span(span) : n.x <= 0 for all n}, canonicalized."""
    w = len(span)
    if w == 0:
        return PolyCone(dim, (), ())
    span_c = list(orth_complement(span, dim))
    lin = kernel_basis(list(normals) + span_c, dim)
    candidates: set[Vec] = set()
    want = w - len(lin) - 1
    if want >= 0:
        for subset in combinations(range(len(normals)), want):
            rows = [normals[s] for s in subset] + span_c
            ker = kernel_basis(rows, dim)
            if len(ker) != len(lin) + 1:
                continue
            for base in ker:
                d = vsub(base, project_onto(lin, base))
                if is_zero(d):
                    continue
                for cand in (d, vneg(d)):
                    if all(dot(n, cand) <= 0 for n in normals):
                        candidates.add(primitive(cand))
    gens = list(candidates)
    for b in lin:
        gens.append(b)
        gens.append(vneg(b))
    return pos_hull(gens, dim) if gens else PolyCone(dim, (), ())


def dual_cone(k: PolyCone) -> PolyCone:
    """Polar dual {u : u.x <= 0 on k}, exactly."""
    gens = list(k.facet_normals)
    for b in orth_complement(k.span, k.dim):
        gens.append(b)
        gens.append(vneg(b))
    return pos_hull(gens, k.dim)


def cone_faces(k: PolyCone) -> list[PolyCone]:
    """All nonempty faces of k, including k itself and its lineality space."""
    normals = k.facet_normals
    lin_gens = []
    for b in k.lineality:
        lin_gens.append(b)
        lin_gens.append(vneg(b))
    seen: dict[tuple, PolyCone] = {}
    for mask in range(1 << len(normals)):
        active = [normals[i] for i in range(len(normals)) if mask >> i & 1]
        gens = [r for r in k.rays if all(dot(n, r) == 0 for n in active)] + lin_gens
        face = pos_hull(gens, k.dim) if gens else PolyCone(k.dim, (), ())
        seen.setdefault((face.rays, face.lineality), face)
    return sorted(seen.values(), key=lambda f: (f.cone_dim, f.rays, f.lineality))


def intersect_cones(a: PolyCone, b: PolyCone) -> PolyCone:
    """Exact intersection of two cones."""
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    span = subspace_intersection(a.span, b.span, a.dim)
    return cone_from_hrep(span, list(a.facet_normals) + list(b.facet_normals), a.dim)


def minkowski_sum_cone(a: PolyCone, b: PolyCone) -> PolyCone:
    return pos_hull(a.generators() + b.generators(), a.dim)


def subspace_cone(basis: Sequence[Vec], dim: int) -> PolyCone:
    """The subspace span(basis) as a canonical cone."""
    gens = []
    for v in basis:
        gens.append(tuple(Fraction(c) for c in v))
        gens.append(vneg(gens[-1]))
    return pos_hull(gens, dim) if gens else PolyCone(dim, (), ())


def full_space(dim: int) -> PolyCone:
    return subspace_cone([unit(dim, i) for i in range(dim)], dim)


def zero_cone(dim: int) -> PolyCone:
    return PolyCone(dim, (), ())


def ri_contains(shape, x: Vec) -> bool:
    """Relative-interior membership for a PolyCone or a vertex list (polytope)."""
    if isinstance(shape, PolyCone):
        if shape.dim != len(x):
            raise DimensionMismatch("point and cone dimensions differ")
        return shape.ri_contains(x)
    points = [tuple(Fraction(c) for c in p) for p in shape]
    if points and len(points[0]) != len(x):
        raise DimensionMismatch("point and hull dimensions differ")
    return in_ri_conv_hull(points, x)
