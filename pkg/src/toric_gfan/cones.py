"""Rational polyhedral cones and fans.

A :class:`Cone` is stored by its extreme rays (primitive, sorted), so two
cones are equal exactly when they are the same set.  Facet inequalities are
derived on demand.  Ray enumeration from inequalities uses the double
description method, always started from a known pointed cone.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from .lattice import (
    LatticeVector,
    cone_index,
    dot,
    hnf,
    kernel_basis,
    primitive,
    rank,
    row_echelon,
    solve,
)


class Position(enum.Enum):
    OUTSIDE = "outside"
    BOUNDARY = "boundary"
    RELATIVE_INTERIOR = "relative_interior"


@dataclass(frozen=True)
class Cone:
    """A pointed rational polyhedral cone, given by its extreme rays."""

    ambient: int
    rays: tuple[LatticeVector, ...]

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], ambient: Optional[int] = None) -> "Cone":
        gens = [primitive(g) for g in gens]
        gens = sorted({g for g in gens if any(g)})
        if ambient is None:
            if not gens:
                raise ValueError("ambient rank needed for the zero cone")
            ambient = len(gens[0])
        if any(len(g) != ambient for g in gens):
            raise ValueError("generator length does not match ambient rank")
        if len(gens) <= 1:
            return cls(ambient, tuple(gens))
        eqs = _span_equations(gens, ambient)
        facets = _facet_normals(gens, eqs, ambient)
        d = ambient - len(eqs)
        if rank(list(facets) + list(eqs)) < ambient:
            raise ValueError("cone is not strongly convex")
        extreme = []
        for g in gens:
            tight = [a for a in facets if dot(a, g) == 0]
            if d == 1 or rank(tight) == d - 1:
                extreme.append(g)
        return cls(ambient, tuple(extreme))

    @classmethod
    def orthant(cls, n: int) -> "Cone":
        return cls(n, tuple(sorted(tuple(int(i == j) for j in range(n)) for i in range(n))))

    @classmethod
    def zero(cls, n: int) -> "Cone":
        return cls(n, ())

    @cached_property
    def dim(self) -> int:
        return rank(self.rays) if self.rays else 0

    @cached_property
    def equations(self) -> tuple[LatticeVector, ...]:
        """Integer basis (in HNF) of the orthogonal complement of the span."""
        return tuple(_span_equations(self.rays, self.ambient))

    @cached_property
    def facets(self) -> tuple[LatticeVector, ...]:
        """Primitive inward facet normals, chosen inside the linear span."""
        return tuple(_facet_normals(self.rays, self.equations, self.ambient))

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient

    def contains(self, v: Sequence) -> Position:
        return contains(self, v)

    def facet_cones(self) -> list["Cone"]:
        return [Cone(self.ambient, tuple(r for r in self.rays if dot(a, r) == 0)) for a in self.facets]

    def faces(self) -> list["Cone"]:
        """All faces, including the zero cone and the cone itself."""
        seen = {self}
        todo = [self]
        while todo:
            c = todo.pop()
            if c.dim == 0:
                continue
            for f in c.facet_cones():
                if f not in seen:
                    seen.add(f)
                    todo.append(f)
        return sorted(seen, key=lambda c: (c.dim, c.rays))

    def is_face_of(self, other: "Cone") -> bool:
        if not set(self.rays) <= set(other.rays):
            return False
        return self in other.faces()

    def is_subset_of(self, other: "Cone") -> bool:
        return all(contains(other, r) is not Position.OUTSIDE for r in self.rays)

    def intersect(self, other: "Cone") -> "Cone":
        return intersect(self, other)

    def __repr__(self) -> str:
        return f"Cone({', '.join(map(str, self.rays)) or '0'})"


def _span_equations(rays: Sequence[Sequence[int]], ambient: int) -> list[LatticeVector]:
    if not rays:
        return [tuple(int(i == j) for j in range(ambient)) for i in range(ambient)]
    return kernel_basis([list(r) for r in rays], ambient)


def _facet_normals(rays, eqs, ambient: int) -> list[LatticeVector]:
    rays = list(rays)
    if not rays:
        return []
    d = ambient - len(eqs)
    if d == 1:
        # the single ray direction, inside its own span
        a = primitive(rays[0])
        return [a] if all(dot(a, r) > 0 for r in rays) else []
    out = set()
    for subset in combinations(rays, d - 1):
        if rank(subset) < d - 1:
            continue
        ker = kernel_basis([list(s) for s in subset] + [list(e) for e in eqs], ambient)
        if len(ker) != 1:
            continue
        a = ker[0]
        vals = [dot(a, r) for r in rays]
        if all(x >= 0 for x in vals):
            out.add(a)
        elif all(x <= 0 for x in vals):
            out.add(tuple(-x for x in a))
    return sorted(out)


def contains(c: Cone, v: Sequence) -> Position:
    """Classify ``v`` against the facet inequalities and equations of ``c``."""
    if len(v) != c.ambient:
        raise ValueError("vector and cone have different ambient rank")
    if any(dot(e, v) != 0 for e in c.equations):
        return Position.OUTSIDE
    vals = [dot(a, v) for a in c.facets]
    if any(x < 0 for x in vals):
        return Position.OUTSIDE
    if c.dim == 0:
        return Position.RELATIVE_INTERIOR
    if any(x == 0 for x in vals):
        return Position.BOUNDARY
    return Position.RELATIVE_INTERIOR


def relative_interior_point(c: Cone) -> LatticeVector:
    """Sum of the primitive ray generators."""
    if not c.rays:
        raise ValueError("the zero cone has no nonzero interior point")
    return tuple(sum(col) for col in zip(*c.rays))


def dual_cone(c: Cone) -> Cone:
    if not c.is_full_dimensional:
        raise ValueError("dual_cone needs a full-dimensional cone")
    return Cone.from_generators(c.facets, c.ambient)


def is_smooth(c: Cone) -> bool:
    if rank(c.rays) < len(c.rays):
        return False
    return cone_index(c.rays) == 1


# ---------------------------------------------------------------- double description


def dd_intersect(start: Cone, ineqs: Iterable[Sequence], eqs: Iterable[Sequence] = ()) -> Cone:
    """Intersect ``start`` with halfspaces ``a.x >= 0`` and hyperplanes ``e.x = 0``."""
    constraints = [list(a) for a in start.facets]
    rays = [tuple(r) for r in start.rays]
    tight = [frozenset(i for i, a in enumerate(constraints) if dot(a, r) == 0) for r in rays]
    new = [list(a) for a in ineqs]
    for e in eqs:
        new.append(list(e))
        new.append([-x for x in e])
    for a in new:
        if not any(a):
            continue
        vals = [dot(a, r) for r in rays]
        if all(x >= 0 for x in vals):
            if all(x > 0 for x in vals):
                continue
        idx = len(constraints)
        constraints.append(a)
        pos = [i for i, x in enumerate(vals) if x > 0]
        neg = [i for i, x in enumerate(vals) if x < 0]
        zer = [i for i, x in enumerate(vals) if x == 0]
        new_rays = [rays[i] for i in pos] + [rays[i] for i in zer]
        new_tight = [tight[i] for i in pos] + [tight[i] | {idx} for i in zer]
        for i in pos:
            for j in neg:
                common = tight[i] & tight[j]
                if any(k != i and k != j and common <= tight[k] for k in range(len(rays))):
                    continue
                r = primitive([vals[i] * y - vals[j] * x for x, y in zip(rays[i], rays[j])])
                new_rays.append(r)
                new_tight.append(common | {idx})
        rays, tight = new_rays, new_tight
    return Cone.from_generators(rays, start.ambient)


def intersect(c1: Cone, c2: Cone) -> Cone:
    if c1.ambient != c2.ambient:
        raise ValueError("ambient ranks differ")
    return dd_intersect(c1, c2.facets, c2.equations)


# ---------------------------------------------------------------- fans


@dataclass(frozen=True)
class Fan:
    """A fan, stored by its maximal cones (sorted)."""

    ambient: int
    maximal: tuple[Cone, ...]

    @classmethod
    def from_cones(cls, cones: Iterable[Cone], ambient: Optional[int] = None) -> "Fan":
        cones = list(cones)
        if ambient is None:
            ambient = cones[0].ambient
        keep = set(cones)
        for c in cones:
            for f in c.faces():
                if f != c:
                    keep.discard(f)
        return cls(ambient, tuple(sorted(keep, key=lambda c: c.rays)))

    @cached_property
    def cones(self) -> tuple[Cone, ...]:
        """Every cone of the fan, sorted by dimension then rays."""
        out = set()
        for c in self.maximal:
            out.update(c.faces())
        if not out:
            out.add(Cone.zero(self.ambient))
        return tuple(sorted(out, key=lambda c: (c.dim, c.rays)))

    @cached_property
    def rays(self) -> tuple[LatticeVector, ...]:
        return tuple(sorted({r for c in self.maximal for r in c.rays}))

    @cached_property
    def support(self) -> Cone:
        """Cone generated by all rays; the support when the fan subdivides a cone."""
        return Cone.from_generators(self.rays, self.ambient)

    def containing_cone(self, v: Sequence) -> Cone:
        """The cone whose relative interior contains ``v``."""
        for c in self.cones:
            if contains(c, v) is Position.RELATIVE_INTERIOR:
                return c
        raise ValueError(f"{v} is not in the support of the fan")

    def ray_indices(self, c: Cone) -> list[int]:
        index = {r: i for i, r in enumerate(self.rays)}
        return [index[r] for r in c.rays]


def check_fan(fan: Fan, support: Optional[Cone] = None) -> list[str]:
    """Return the list of violated fan axioms (empty when ``fan`` is a fan).

    With ``support`` given, also checks that the maximal cones are
    full-dimensional and cover exactly that cone: every facet of a maximal
    cone lies either on the boundary of ``support`` or in exactly one other
    maximal cone.
    """
    problems = []
    cones = set(fan.cones)
    for c in fan.maximal:
        for f in c.faces():
            if f not in cones:
                problems.append(f"face {f} of {c} missing")
    maximal = list(fan.maximal)
    for i, a in enumerate(maximal):
        for b in maximal[i + 1:]:
            meet = intersect(a, b)
            if not (meet.is_face_of(a) and meet.is_face_of(b)):
                problems.append(f"{a} and {b} meet in {meet}, not a common face")
    if support is not None:
        for c in maximal:
            if not c.is_subset_of(support):
                problems.append(f"{c} leaves the support")
            if c.dim != support.dim:
                problems.append(f"{c} is not full-dimensional in the support")
        boundary = support.facet_cones()
        for c in maximal:
            for f in c.facet_cones():
                if any(f.is_subset_of(b) for b in boundary):
                    continue
                others = [d for d in maximal if d != c and f in d.facet_cones()]
                if len(others) != 1:
                    problems.append(f"interior facet {f} of {c} has {len(others)} neighbours")
    return problems


def common_refinement(f1: Fan, f2: Fan) -> Fan:
    if f1.ambient != f2.ambient:
        raise ValueError("fans live in different lattices")
    if f1.support != f2.support:
        raise ValueError("fans have different supports")
    d = f1.support.dim
    out = set()
    for a in f1.maximal:
        for b in f2.maximal:
            c = intersect(a, b)
            if c.dim == d:
                out.add(c)
    return Fan.from_cones(out, f1.ambient)


# ---------------------------------------------------------------- triangulation


def placing_triangulation(rays: Sequence[LatticeVector]) -> list[tuple[LatticeVector, ...]]:
    """Placing triangulation of the cone over ``rays``, inserting in the given order.

    ``rays`` must all be extreme.  With a global insertion order the
    triangulations of two cones agree on their common faces.
    """
    simplices: list[tuple[LatticeVector, ...]] = []
    placed: list[LatticeVector] = []
    for p in rays:
        if not placed:
            simplices = [(p,)]
            placed.append(p)
            continue
        d = rank(placed)
        if rank(placed + [p]) > d:
            simplices = [s + (p,) for s in simplices]
            placed.append(p)
            continue
        count: dict[frozenset, int] = {}
        owner: dict[frozenset, tuple] = {}
        for s in simplices:
            for i in range(len(s)):
                f = frozenset(s[:i] + s[i + 1:])
                count[f] = count.get(f, 0) + 1
                owner[f] = (s, s[i])
        eqs = _span_equations(placed, len(p))
        added = []
        for f, k in count.items():
            if k != 1:
                continue
            s, opposite = owner[f]
            ker = kernel_basis([list(x) for x in f] + [list(e) for e in eqs], len(p))
            a = ker[0]
            if dot(a, opposite) < 0:
                a = tuple(-x for x in a)
            if dot(a, p) < 0:
                added.append(tuple(sorted(f)) + (p,))
        simplices = simplices + added
        placed.append(p)
    return [tuple(sorted(s)) for s in simplices]


def barycentric(rays: Sequence[LatticeVector], v: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Coefficients of ``v`` in linearly independent ``rays``, or None if outside the span."""
    A = [list(col) for col in zip(*rays)]
    x = solve(A, list(v))
    if x is None:
        return None
    if any(sum(a * xi for a, xi in zip(row, x)) != vi for row, vi in zip(A, v)):
        return None
    return x


def parallelepiped_points(rays: Sequence[LatticeVector]) -> list[LatticeVector]:
    """Nonzero lattice points of ``{sum l_i r_i : 0 <= l_i < 1}`` for independent rays."""
    n = len(rays[0])
    lo = [sum(min(0, r[j]) for r in rays) for j in range(n)]
    hi = [sum(max(0, r[j]) for r in rays) for j in range(n)]
    out = []
    for p in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if not any(p):
            continue
        lam = barycentric(rays, p)
        if lam is not None and all(0 <= x < 1 for x in lam):
            out.append(tuple(p))
    return out


def hilbert_basis(c: Cone) -> list[LatticeVector]:
    """Minimal generating set of the semigroup ``c`` intersected with the lattice."""
    if not c.rays:
        return []
    candidates = set(c.rays)
    for s in placing_triangulation(c.rays):
        candidates.update(parallelepiped_points(s))
    basis = []
    for h in candidates:
        reducible = False
        for g in candidates:
            if g == h:
                continue
            diff = tuple(a - b for a, b in zip(h, g))
            if contains(c, diff) is not Position.OUTSIDE:
                reducible = True
                break
        if not reducible:
            basis.append(h)
    return sorted(basis)


# ---------------------------------------------------------------- desingularization


def _simplex_key(s: tuple[LatticeVector, ...]):
    return (cone_index(s), s)


def _best_subdivision_ray(s: tuple[LatticeVector, ...]) -> LatticeVector:
    def weight(p):
        return (sum(barycentric(s, p)), p)

    return primitive(min(parallelepiped_points(s), key=weight))


def stellar_subdivide(simplices: Iterable[tuple[LatticeVector, ...]], w: LatticeVector) -> list[tuple[LatticeVector, ...]]:
    """Stellar subdivision of a simplicial fan at the ray ``w``."""
    out = set()
    for s in simplices:
        lam = barycentric(s, w)
        if lam is None or any(x < 0 for x in lam):
            out.add(s)
            continue
        for i, x in enumerate(lam):
            if x > 0:
                out.add(tuple(sorted(s[:i] + s[i + 1:] + (w,))))
    return sorted(out)


def regularize(f: Fan) -> Fan:
    """A smooth fan refining ``f`` that keeps all of its rays.

    Triangulates with a placing order (lexicographic on the rays of ``f``),
    then repeatedly stars the least-index singular cone at the lattice point
    of its fundamental parallelepiped with the smallest coefficient sum.
    """
    order = {r: i for i, r in enumerate(f.rays)}
    simplices = set()
    for c in f.maximal:
        rays = sorted(c.rays, key=order.__getitem__)
        simplices.update(placing_triangulation(rays))
    simplices = sorted(simplices)
    while True:
        bad = [s for s in simplices if cone_index(s) > 1]
        if not bad:
            break
        worst = min(bad, key=_simplex_key)
        simplices = stellar_subdivide(simplices, _best_subdivision_ray(worst))
    return Fan.from_cones((Cone(f.ambient, s) for s in simplices), f.ambient)
