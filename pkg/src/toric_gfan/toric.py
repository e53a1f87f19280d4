"""The affine toric ring ``K[sigma^dual ∩ M]`` and its presentation over ``K[y]``.

The ring is presented by the Hilbert basis ``a_1..a_s`` of the dual cone:
``Psi(y_i) = x^{a_i}``.  Ideals of the toric ring are handled through their
preimages in ``K[y]``, which contain the toric ideal ``ker Psi``; weights
``v`` in ``sigma`` correspond to ``phi(v) = (v.a_1, ..., v.a_s)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .cones import Cone, Position, contains, dual_cone, hilbert_basis, relative_interior_point
from .lattice import IntMatrix, LatticeVector, dot, kernel_basis, primitive
from .polynomials import (
    QQ,
    FieldSpec,
    Ideal,
    Polynomial,
    WeightOrder,
    as_weight_order,
    contains_monomial,
    coordinate_product,
    initial_ideal,
    saturate,
)


class ToricRing:
    """The data ``(sigma, sigma^dual, Hilbert basis, M)`` over a field."""

    def __init__(self, sigma: Cone, field: FieldSpec = QQ):
        if not sigma.is_full_dimensional:
            raise ValueError("sigma must be full-dimensional")
        self.sigma = sigma
        self.field = field
        self.sigma_dual = dual_cone(sigma)
        self.hilbert: tuple[LatticeVector, ...] = tuple(hilbert_basis(self.sigma_dual))
        self.n = sigma.ambient
        self.s = len(self.hilbert)
        # M[k][l] = a_l[k]
        self.mmatrix: IntMatrix = tuple(tuple(a[k] for a in self.hilbert) for k in range(self.n))
        self._lifts: dict = {}
        self._interior = relative_interior_point(sigma)

    @classmethod
    def from_rays(cls, rays: Iterable[Sequence[int]], field: FieldSpec = QQ) -> "ToricRing":
        return cls(Cone.from_generators(rays), field)

    def with_field(self, field: FieldSpec) -> "ToricRing":
        return ToricRing(self.sigma, field)

    def __eq__(self, other):
        return isinstance(other, ToricRing) and self.sigma == other.sigma and self.field == other.field

    def __hash__(self):
        return hash((self.sigma, self.field))

    def __repr__(self):
        return f"ToricRing(sigma={self.sigma}, field={self.field})"

    # ----------------------------------------------------------- lattice maps

    def check_in_sigma(self, v: Sequence) -> None:
        if len(v) != self.n:
            raise ValueError("weight has the wrong length")
        if contains(self.sigma, v) is Position.OUTSIDE:
            raise ValueError(f"{tuple(v)} is not in sigma")

    def phi(self, v: Sequence) -> tuple:
        """``(v.a_1, ..., v.a_s)``; ``v`` must lie in sigma."""
        self.check_in_sigma(v)
        return self.phi_linear(v)

    def phi_linear(self, v: Sequence) -> tuple:
        """The linear map ``v -> M^T v`` without the sigma check."""
        return tuple(dot(v, a) for a in self.hilbert)

    def image(self, gamma: Sequence[int]) -> LatticeVector:
        """``M gamma``: the exponent of ``Psi(y^gamma)``."""
        return tuple(sum(a[k] * g for a, g in zip(self.hilbert, gamma)) for k in range(self.n))

    def in_phi_sigma(self, w: Sequence) -> bool:
        """Whether ``w`` lies in ``phi(sigma)``."""
        from .lattice import solve

        v = solve([list(a) for a in self.hilbert], list(w))
        if v is None:
            return False
        if self.phi_linear(v) != tuple(Fraction(x) for x in w):
            return False
        return contains(self.sigma, v) is not Position.OUTSIDE

    def lift_exponent(self, beta: Sequence[int]) -> LatticeVector:
        """Some ``gamma >= 0`` with ``M gamma = beta`` (bounded search)."""
        beta = tuple(int(b) for b in beta)
        hit = self._lifts.get(beta)
        if hit is not None:
            return hit
        if contains(self.sigma_dual, beta) is Position.OUTSIDE:
            raise ValueError(f"{beta} is not in the dual cone")
        # every a_i has positive weight on an interior point of sigma, which bounds the search
        u = self._interior
        weights = [dot(u, a) for a in self.hilbert]
        order = sorted(range(self.s), key=lambda i: (-weights[i], self.hilbert[i]))
        gamma = [0] * self.s

        def search(k: int, rest: tuple) -> bool:
            if not any(rest):
                return True
            if k == self.s:
                return False
            i = order[k]
            a = self.hilbert[i]
            budget = dot(u, rest) // weights[i]
            for c in range(budget, -1, -1):
                r = tuple(x - c * y for x, y in zip(rest, a))
                if contains(self.sigma_dual, r) is Position.OUTSIDE:
                    continue
                gamma[i] = c
                if search(k + 1, r):
                    return True
            gamma[i] = 0
            return False

        if not search(0, beta):
            raise RuntimeError(f"no nonnegative lift of {beta}: Hilbert basis is inconsistent")
        out = tuple(gamma)
        self._lifts[beta] = out
        return out

    # ----------------------------------------------------------- polynomial maps

    def polynomial_ring_ideal(self, gens: Iterable[Polynomial] = ()) -> Ideal:
        return Ideal(self.field, self.s, gens)

    def y(self, text: str) -> Polynomial:
        return Polynomial.parse(text, self.s, self.field)

    def psi(self, h: Polynomial) -> "ToricPolynomial":
        """``Psi(h) = sum a_g x^{M g}``, collecting like terms."""
        if h.nvars != self.s or h.field != self.field:
            raise ValueError("polynomial is not in the ring presenting this toric ring")
        terms: dict = {}
        for g, c in h.terms.items():
            beta = self.image(g)
            terms[beta] = terms.get(beta, 0) + c
        return ToricPolynomial(self, terms)

    def lift(self, f: "ToricPolynomial") -> Polynomial:
        """A preimage of ``f`` under Psi, lifting monomial by monomial."""
        return Polynomial(self.field, self.s, {self.lift_exponent(b): c for b, c in f.terms.items()})

    @cached_property
    def toric_ideal(self) -> Ideal:
        """``I_sigma = ker Psi``: lattice binomials saturated by ``y1...ys``."""
        gens = []
        for g in kernel_basis(self.mmatrix, self.s):
            plus = tuple(max(x, 0) for x in g)
            minus = tuple(max(-x, 0) for x in g)
            gens.append(Polynomial(self.field, self.s, {plus: 1, minus: -1}))
        ideal = Ideal(self.field, self.s, gens)
        if not gens:
            return ideal
        return saturate(ideal, coordinate_product(self.field, self.s))

    def toric_polynomial(self, terms: Mapping[Sequence[int], object]) -> "ToricPolynomial":
        return ToricPolynomial(self, terms)

    def monomial(self, alpha: Sequence[int], c=1) -> "ToricPolynomial":
        return ToricPolynomial(self, {tuple(alpha): c})


class ToricPolynomial:
    """An element ``sum c_a x^a`` of the toric ring, exponents in the dual cone."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: ToricRing, terms: Mapping[Sequence[int], object]):
        self.ring = ring
        field = ring.field
        p = field.characteristic
        out: dict = {}
        for a, c in terms.items():
            a = tuple(int(x) for x in a)
            if len(a) != ring.n:
                raise ValueError(f"exponent {a} has the wrong length")
            c = field(c)
            if not c:
                continue
            if contains(ring.sigma_dual, a) is Position.OUTSIDE:
                raise ValueError(f"exponent {a} is not in the dual cone")
            v = out.get(a, 0) + c
            if p:
                v %= p
            if v:
                out[a] = v
            else:
                out.pop(a, None)
        self.terms = out

    def __bool__(self):
        return bool(self.terms)

    @property
    def support(self) -> list[LatticeVector]:
        return sorted(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ToricPolynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other: "ToricPolynomial") -> "ToricPolynomial":
        terms = dict(self.terms)
        for a, c in other.terms.items():
            terms[a] = terms.get(a, 0) + c
        return ToricPolynomial(self.ring, terms)

    def __neg__(self):
        return ToricPolynomial(self.ring, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "ToricPolynomial") -> "ToricPolynomial":
        if not isinstance(other, ToricPolynomial):
            return ToricPolynomial(self.ring, {a: c * self.ring.field(other) for a, c in self.terms.items()})
        terms: dict = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                e = tuple(x + y for x, y in zip(a, b))
                terms[e] = terms.get(e, 0) + c * d
        return ToricPolynomial(self.ring, terms)

    def has_constant_term(self) -> bool:
        return (0,) * self.ring.n in self.terms

    def to_string(self, prefix: str = "x") -> str:
        if not self.terms:
            return "0"
        parts = []
        for a in self.support:
            c = Fraction(self.terms[a])
            mono = "*".join(f"{prefix}{i + 1}" + (f"^{k}" if k != 1 else "") for i, k in enumerate(a) if k)
            body = mono if (mono and abs(c) == 1) else (f"{abs(c)}*{mono}" if mono else str(abs(c)))
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return f"ToricPolynomial({self.to_string()!r})"


@dataclass(frozen=True)
class ToricIdealSpec:
    """An ideal of the toric ring, given by generators."""

    ring: ToricRing
    generators: tuple[ToricPolynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(g for g in self.generators if g))
        if any(g.ring != self.ring for g in self.generators):
            raise ValueError("generator from a different ring")


# ---------------------------------------------------------------- valuations


def nu(v: Sequence, f: ToricPolynomial):
    """``min v.a`` over the support of ``f``; infinity for ``f = 0``."""
    f.ring.check_in_sigma(v)
    if not f.terms:
        return float("inf")
    return min(dot(v, a) for a in f.terms)


def initial_form(v: Sequence, f: ToricPolynomial) -> ToricPolynomial:
    """Sum of the terms of ``f`` attaining ``nu(v, f)``."""
    if not f.terms:
        f.ring.check_in_sigma(v)
        return f
    m = nu(v, f)
    return ToricPolynomial(f.ring, {a: c for a, c in f.terms.items() if dot(v, a) == m})


def phi(ring: ToricRing, v: Sequence) -> tuple:
    return ring.phi(v)


def psi_apply(ring: ToricRing, h: Polynomial) -> ToricPolynomial:
    return ring.psi(h)


def toric_ideal(ring: ToricRing) -> Ideal:
    return ring.toric_ideal


def phi_pullback(ring: ToricRing, c: Cone) -> Cone:
    """``{v in sigma : phi(v) in c}``."""
    from .cones import dd_intersect

    if c.ambient != ring.s:
        raise ValueError("cone must live in weight space")
    ineqs = [ring.image(a) for a in c.facets]
    eqs = [ring.image(e) for e in c.equations]
    return dd_intersect(ring.sigma, ineqs, eqs)


# ---------------------------------------------------------------- ideals


def lift_ideal(spec: ToricIdealSpec) -> Ideal:
    """``Psi^{-1}(J)``: monomial-wise lifts of the generators plus ``I_sigma``."""
    ring = spec.ring
    gens = [ring.lift(f) for f in spec.generators]
    return Ideal(ring.field, ring.s, gens + list(ring.toric_ideal.generators))


def _lifted(spec: ToricIdealSpec) -> Ideal:
    # lifting is deterministic, so memoize on the spec
    cache = _LIFT_CACHE.get(spec)
    if cache is None:
        cache = _LIFT_CACHE[spec] = lift_ideal(spec)
    return cache


_LIFT_CACHE: dict = {}


def polynomial_initial_ideal(spec: ToricIdealSpec, v: Sequence) -> Ideal:
    """``in_{phi(v)}(Psi^{-1}(J))`` in ``K[y]``."""
    return initial_ideal(_lifted(spec), spec.ring.phi(v))


def toric_initial_ideal(spec: ToricIdealSpec, v: Sequence) -> ToricIdealSpec:
    """``In_v(J) = Psi(in_{phi(v)}(Psi^{-1}(J)))``."""
    ring = spec.ring
    ideal = polynomial_initial_ideal(spec, v)
    return ToricIdealSpec(ring, tuple(ring.psi(g) for g in ideal.groebner_basis()))


def toric_ideal_equal(a: ToricIdealSpec, b: ToricIdealSpec) -> bool:
    """Equality of toric-ring ideals, compared through their preimages."""
    if a.ring != b.ring:
        raise ValueError("ideals live in different rings")
    return lift_ideal(a) == lift_ideal(b)


def lift_improvements(f: ToricPolynomial, v: Sequence, start: Optional[Polynomial] = None) -> Iterator[Polynomial]:
    """Successive lifts of ``f``, each with strictly larger ``phi(v)``-valuation.

    Starting from ``start`` (default: the monomial-wise lift), drops the
    initial form while its image under Psi vanishes.
    """
    ring = f.ring
    if not f:
        raise ValueError("cannot lift the zero element")
    w = ring.phi(v)
    h = ring.lift(f) if start is None else start
    if ring.psi(h) != f:
        raise ValueError("start is not a preimage of f")
    yield h
    while True:
        top = h.initial_form(w)
        if ring.psi(top):
            return
        h = h - top
        yield h


def max_weight_lift(f: ToricPolynomial, v: Sequence, start: Optional[Polynomial] = None) -> Polynomial:
    """A preimage ``h`` of ``f`` with ``nu_{phi(v)}(h) = nu_v(f)``."""
    for h in lift_improvements(f, v, start):
        pass
    return h


def trop_membership(ideal: Ideal, w) -> bool:
    """Whether ``in_w(ideal)`` contains no monomial."""
    w = as_weight_order(w)
    if ideal.is_zero():
        return True
    return not contains_monomial(initial_ideal(ideal, w))
