"""Groebner cones and the Groebner fan of a toric-ring ideal restricted to sigma.

Classes of weights ``v`` in sigma with equal initial ideals are computed on
the polynomial side: ``In_v(J)`` is determined by ``in_{phi(v)}`` of the
preimage ideal, so the fan is the Groebner fan of the preimage pulled back
through ``phi``.  Maximal cones are found by breadth-first wall crossing;
generic points are represented symbolically as a base weight refined by
lexicographic tie-breaking directions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .cones import Cone, Fan, Position, contains, dd_intersect, relative_interior_point
from .lattice import dot, primitive
from .polynomials import Ideal, Polynomial, WeightOrder, as_weight_order, marked_basis
from .toric import ToricIdealSpec, ToricRing, _lifted, toric_initial_ideal


@dataclass(frozen=True)
class MarkedGB:
    """Basis elements with their initial forms under the defining weight."""

    basis: tuple[Polynomial, ...]
    marks: tuple[Polynomial, ...]

    @classmethod
    def of(cls, ideal: Ideal, w) -> "MarkedGB":
        pairs = marked_basis(ideal, w)
        return cls(tuple(g for g, _ in pairs), tuple(m for _, m in pairs))

    def constraints(self) -> tuple[list[tuple], list[tuple]]:
        """Weight-space constraints ``(ineqs, eqs)`` keeping every mark minimal.

        Inequalities ``w.(b - a) >= 0`` for marked ``a`` and trailing ``b``;
        equations ``w.(a - a') = 0`` between marked exponents.
        """
        ineqs, eqs = set(), set()
        for g, m in zip(self.basis, self.marks):
            marked = sorted(m.terms)
            trailing = [e for e in g.terms if e not in m.terms]
            a0 = marked[0]
            for a in marked[1:]:
                eqs.add(primitive([x - y for x, y in zip(a, a0)]))
            for b in trailing:
                ineqs.add(primitive([x - y for x, y in zip(b, a0)]))
        return sorted(ineqs), sorted(eqs)

    def initial_ideal(self) -> Ideal:
        g = self.basis[0] if self.basis else None
        if g is None:
            raise ValueError("empty marked basis")
        return Ideal(g.field, g.nvars, self.marks)


def groebner_cone(ideal: Ideal, w) -> Cone:
    """Closed Groebner cone of ``ideal`` at ``w`` inside the nonnegative orthant."""
    w = as_weight_order(w)
    s = ideal.nvars
    if ideal.is_zero():
        return Cone.orthant(s)
    ineqs, eqs = MarkedGB.of(ideal, w).constraints()
    return dd_intersect(Cone.orthant(s), ineqs, eqs)


@dataclass
class GroebnerFanRestricted:
    """The Groebner fan of a toric-ring ideal on sigma, with per-cone payloads."""

    spec: ToricIdealSpec
    fan: Fan
    initial_ideals: tuple[ToricIdealSpec, ...]
    marked: tuple[MarkedGB, ...]
    _face_cache: dict = field(default_factory=dict, repr=False)

    @property
    def ring(self) -> ToricRing:
        return self.spec.ring

    def index_of(self, c: Cone) -> int:
        return self.fan.maximal.index(c)

    def representative(self, c: Cone) -> tuple:
        if c.dim == 0:
            return (0,) * c.ambient
        return relative_interior_point(c)

    def polynomial_payload(self, c: Cone) -> Ideal:
        """``in_{phi(v)}`` of the preimage ideal for ``v`` in the relative interior of ``c``."""
        hit = self._face_cache.get(c)
        if hit is None:
            v = self.representative(c)
            hit = self._face_cache[c] = Ideal(
                self.ring.field,
                self.ring.s,
                [m for _, m in marked_basis(_lifted(self.spec), self.ring.phi(v))],
            )
        return hit

    def payload(self, c: Cone) -> ToricIdealSpec:
        if c in self.fan.maximal:
            return self.initial_ideals[self.index_of(c)]
        return toric_initial_ideal(self.spec, self.representative(c))

    def cone_of(self, v: Sequence) -> Cone:
        return self.fan.containing_cone(v)


def _tiers(ring: ToricRing, points: Sequence[Sequence[int]]) -> WeightOrder:
    ws = [ring.phi_linear(p) for p in points]
    return WeightOrder(ws[0], tuple(ws[1:]))


def _basis_directions(n: int) -> list[tuple[int, ...]]:
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


def _cell(ring: ToricRing, ideal: Ideal, points: Sequence[Sequence[int]]) -> tuple[Cone, MarkedGB]:
    """Pulled-back Groebner cone at the symbolic point ``p0 + e p1 + e^2 p2 + ...``."""
    w = _tiers(ring, points)
    marked = MarkedGB.of(ideal, w)
    ineqs, _ = marked.constraints()
    # marks tie under a basis of N, so they have equal images and the equations pull back to 0
    pulled = [ring.image(a) for a in ineqs]
    return dd_intersect(ring.sigma, pulled), marked


def restricted_groebner_fan(spec: ToricIdealSpec) -> GroebnerFanRestricted:
    """Subdivision of sigma by closures of the classes of equal ``In_v(J)``."""
    ring = spec.ring
    sigma = ring.sigma
    if not sigma.is_full_dimensional:
        raise ValueError("sigma must be full-dimensional")
    ideal = _lifted(spec)
    n = ring.n
    basis = _basis_directions(n)
    boundary = sigma.facets

    start = relative_interior_point(sigma)
    cell, marked = _cell(ring, ideal, [start] + basis)
    cells = {cell: marked}
    queue = deque([cell])
    while queue:
        c = queue.popleft()
        for a in c.facets:
            f_rays = [r for r in c.rays if dot(a, r) == 0]
            if any(all(dot(b, r) == 0 for r in f_rays) for b in boundary):
                continue
            p = tuple(sum(col) for col in zip(*f_rays))
            out = tuple(-x for x in a)
            nxt, nmarked = _cell(ring, ideal, [p, out] + basis)
            if nxt.dim != n:
                raise RuntimeError(f"wall crossing from {c} produced a degenerate cell {nxt}")
            if nxt not in cells:
                cells[nxt] = nmarked
                queue.append(nxt)

    merged = _merge_equal_classes(ring, cells)
    fan = Fan.from_cones(merged.keys(), n)
    marks = tuple(merged[c] for c in fan.maximal)
    inits = tuple(
        ToricIdealSpec(ring, tuple(ring.psi(g) for g in m.initial_ideal().groebner_basis()))
        for m in marks
    )
    return GroebnerFanRestricted(spec, fan, inits, marks)


def _merge_equal_classes(ring: ToricRing, cells: dict) -> dict:
    """Unite cells whose initial ideals agree; their union is again a cone."""
    groups: dict = {}
    for c, m in cells.items():
        groups.setdefault(m.initial_ideal().canonical, []).append((c, m))
    out = {}
    for members in groups.values():
        if len(members) == 1:
            c, m = members[0]
            out[c] = m
            continue
        rays = {r for c, _ in members for r in c.rays}
        union = Cone.from_generators(rays, ring.n)
        out[union] = members[0][1]
    return out


def same_class(spec: ToricIdealSpec, v1: Sequence, v2: Sequence) -> bool:
    """Whether ``In_{v1}(J) = In_{v2}(J)``."""
    from .toric import polynomial_initial_ideal

    return polynomial_initial_ideal(spec, v1) == polynomial_initial_ideal(spec, v2)
