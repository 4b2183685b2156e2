"""Finite complete lattices: construction, verification, isomorphism checks, DOT export.

Element payloads are opaque.  A payload may expose `key` (canonical hashable
descriptor), `dim` (integer rank for diagram layout) and `label` (display
string); plain hashable objects work as their own key.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence


class LatticeError(Exception):
    pass


class NotALattice(LatticeError):
    """Some pair of elements has no infimum or no supremum."""


class DuplicateElement(LatticeError):
    """Two elements share the same canonical descriptor."""


def element_key(payload):
    return getattr(payload, "key", payload)


def element_label(payload) -> str:
    lab = getattr(payload, "label", None)
    if lab is None:
        return str(element_key(payload))
    return lab() if callable(lab) else str(lab)


def element_dim(payload) -> int:
    d = getattr(payload, "dim", None)
    if d is None:
        return 0
    return d() if callable(d) else int(d)


@dataclass(frozen=True)
class FiniteLattice:
    """Explicit finite complete lattice with a full order matrix.

    Immutable after construction; all query methods are pure.
    """

    elements: tuple
    leq: tuple[tuple[bool, ...], ...]
    bottom: int
    top: int
    _meet: tuple[tuple[int, ...], ...] = field(repr=False)
    _join: tuple[tuple[int, ...], ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, key) -> int:
        for i, e in enumerate(self.elements):
            if element_key(e) == key:
                return i
        raise KeyError(key)

    def le(self, i: int, j: int) -> bool:
        return self.leq[i][j]

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq[i][j]

    def meet(self, indices: Iterable[int]) -> int:
        """Infimum of a set of elements; the empty infimum is the top."""
        out = None
        for i in indices:
            out = i if out is None else self._meet[out][i]
        return self.top if out is None else out

    def join(self, indices: Iterable[int]) -> int:
        """Supremum of a set of elements; the empty supremum is the bottom."""
        out = None
        for i in indices:
            out = i if out is None else self._join[out][i]
        return self.bottom if out is None else out

    def atoms(self) -> list[int]:
        """Elements with only the bottom strictly below them."""
        out = []
        for x in range(len(self.elements)):
            if x == self.bottom:
                continue
            below = [y for y in range(len(self.elements)) if self.lt(y, x)]
            if below == [self.bottom]:
                out.append(x)
        return out

    def coatoms(self) -> list[int]:
        """Elements with only the top strictly above them."""
        out = []
        for x in range(len(self.elements)):
            if x == self.top:
                continue
            above = [y for y in range(len(self.elements)) if self.lt(x, y)]
            if above == [self.top]:
                out.append(x)
        return out

    def covers(self, i: int, j: int) -> bool:
        """True when j covers i (i < j with nothing strictly between)."""
        if not self.lt(i, j):
            return False
        return not any(self.lt(i, k) and self.lt(k, j)
                       for k in range(len(self.elements)))

    def hasse_edges(self) -> list[tuple[int, int]]:
        n = len(self.elements)
        return [(i, j) for i in range(n) for j in range(n) if self.covers(i, j)]

    def is_modular(self) -> bool:
        """Check the modular law x <= z  =>  x v (y ^ z) = (x v y) ^ z."""
        n = len(self.elements)
        for x in range(n):
            for z in range(n):
                if not self.leq[x][z]:
                    continue
                for y in range(n):
                    lhs = self._join[x][self._meet[y][z]]
                    rhs = self._meet[self._join[x][y]][z]
                    if lhs != rhs:
                        return False
        return True

    def to_dot(self, name: str = "lattice") -> str:
        """Hasse diagram in DOT format, ranked by element dimension."""
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
        for i, e in enumerate(self.elements):
            label = element_label(e).replace('"', r"\"")
            lines.append(f'  n{i} [label="{label}"];')
        by_dim: dict[int, list[int]] = {}
        for i, e in enumerate(self.elements):
            by_dim.setdefault(element_dim(e), []).append(i)
        for d in sorted(by_dim):
            members = " ".join(f"n{i};" for i in by_dim[d])
            lines.append(f"  {{ rank=same; {members} }}")
        for i, j in self.hasse_edges():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines)


def build_lattice(elements: Sequence, leq: Callable) -> FiniteLattice:
    """Build and verify a finite complete lattice from elements and an order predicate.

    Raises DuplicateElement when two elements share a canonical descriptor and
    NotALattice when the order axioms fail or some pair lacks a meet or join.
    """
    elements = tuple(elements)
    if not elements:
        raise NotALattice("empty element list")
    keys = [element_key(e) for e in elements]
    if len(set(keys)) != len(keys):
        raise DuplicateElement("elements share a canonical descriptor")
    n = len(elements)
    m = tuple(tuple(bool(leq(elements[i], elements[j])) for j in range(n))
              for i in range(n))
    for i in range(n):
        if not m[i][i]:
            raise NotALattice("order is not reflexive")
    for i in range(n):
        for j in range(n):
            if i != j and m[i][j] and m[j][i]:
                raise NotALattice("order is not antisymmetric")
    for i in range(n):
        for j in range(n):
            if not m[i][j]:
                continue
            for k in range(n):
                if m[j][k] and not m[i][k]:
                    raise NotALattice("order is not transitive")
    meet_tab = [[0] * n for _ in range(n)]
    join_tab = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            lower = [k for k in range(n) if m[k][i] and m[k][j]]
            glb = [g for g in lower if all(m[k][g] for k in lower)]
            if len(glb) != 1:
                raise NotALattice(
                    f"pair ({keys[i]!r}, {keys[j]!r}) has no infimum")
            upper = [k for k in range(n) if m[i][k] and m[j][k]]
            lub = [g for g in upper if all(m[g][k] for k in upper)]
            if len(lub) != 1:
                raise NotALattice(
                    f"pair ({keys[i]!r}, {keys[j]!r}) has no supremum")
            meet_tab[i][j] = meet_tab[j][i] = glb[0]
            join_tab[i][j] = join_tab[j][i] = lub[0]
    bottom = 0
    top = 0
    for i in range(1, n):
        bottom = meet_tab[bottom][i]
        top = join_tab[top][i]
    return FiniteLattice(elements, m, bottom, top,
                         tuple(tuple(r) for r in meet_tab),
                         tuple(tuple(r) for r in join_tab))


@dataclass(frozen=True)
class LatticeMap:
    """Total mapping between two finite lattices, tagged isotone or antitone."""

    source: FiniteLattice
    target: FiniteLattice
    mapping: tuple[int, ...]
    direction: str  # "isotone" | "antitone"

    def __post_init__(self):
        if self.direction not in ("isotone", "antitone"):
            raise ValueError("direction must be 'isotone' or 'antitone'")
        if len(self.mapping) != len(self.source.elements):
            raise ValueError("mapping is not total on the source")


def lattice_map(source: FiniteLattice, target: FiniteLattice,
                f: Callable, direction: str) -> LatticeMap:
    """Build a LatticeMap by applying f to payloads and matching target keys."""
    mapping = tuple(target.index_of(element_key(f(e))) for e in source.elements)
    return LatticeMap(source, target, mapping, direction)


@dataclass(frozen=True)
class IsomorphismReport:
    injective: bool
    surjective: bool
    order_preserved: bool
    inverse_order_preserved: bool
    failures: tuple[str, ...]

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    @property
    def passed(self) -> bool:
        return (self.bijective and self.order_preserved
                and self.inverse_order_preserved)


def verify_isomorphism(m: LatticeMap) -> IsomorphismReport:
    """Check bijectivity and order behaviour of a lattice map.

    An order-compatible bijection whose inverse is also order compatible is a
    lattice isomorphism; failures are reported, never raised.
    """
    src, tgt, f = m.source, m.target, m.mapping
    failures = []
    injective = len(set(f)) == len(f)
    if not injective:
        seen: dict[int, int] = {}
        for i, t in enumerate(f):
            if t in seen:
                failures.append(
                    f"not injective: {element_label(src.elements[seen[t]])} and "
                    f"{element_label(src.elements[i])} both map to "
                    f"{element_label(tgt.elements[t])}")
                break
            seen[t] = i
    surjective = set(f) == set(range(len(tgt.elements)))
    if not surjective:
        failures.append("not surjective onto the target lattice")

    def expect(i, j):
        return tgt.le(f[i], f[j]) if m.direction == "isotone" else tgt.le(f[j], f[i])

    order_ok = True
    n = len(src.elements)
    for i in range(n):
        for j in range(n):
            if src.le(i, j) and not expect(i, j):
                order_ok = False
                failures.append(
                    f"order violated at {element_label(src.elements[i])} <= "
                    f"{element_label(src.elements[j])}")
                break
        if not order_ok:
            break
    inverse_ok = injective and surjective
    if inverse_ok:
        inv = {t: i for i, t in enumerate(f)}
        for a in range(len(tgt.elements)):
            for b in range(len(tgt.elements)):
                if not tgt.le(a, b):
                    continue
                i, j = inv[a], inv[b]
                ok = src.le(i, j) if m.direction == "isotone" else src.le(j, i)
                if not ok:
                    inverse_ok = False
                    failures.append(
                        f"inverse order violated at {element_label(tgt.elements[a])}"
                        f" <= {element_label(tgt.elements[b])}")
                    break
            if not inverse_ok:
                break
    return IsomorphismReport(injective, surjective, order_ok, inverse_ok,
                             tuple(failures))


def decompose_by_atoms(lat: FiniteLattice, x: int, bound: int) -> list[int] | None:
    """Lexicographically smallest set of <= bound atoms whose join is x."""
    atoms = lat.atoms()
    for size in range(1, bound + 1):
        for subset in combinations(atoms, size):
            if lat.join(subset) == x:
                return list(subset)
    return None


def decompose_by_coatoms(lat: FiniteLattice, x: int, bound: int) -> list[int] | None:
    """Lexicographically smallest set of <= bound coatoms whose meet is x."""
    coatoms = lat.coatoms()
    for size in range(1, bound + 1):
        for subset in combinations(coatoms, size):
            if lat.meet(subset) == x:
                return list(subset)
    return None
