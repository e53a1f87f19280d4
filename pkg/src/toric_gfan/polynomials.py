"""Exact multivariate polynomials over Q or F_p, and ideal computations.

Polynomials are immutable maps from exponent tuples to nonzero
coefficients.  Coefficients are :class:`fractions.Fraction` over Q and
ints in ``[0, p)`` over F_p.

Initial forms and initial ideals use the MIN convention: the initial form
of ``f`` with respect to a weight ``w`` collects the terms of smallest
``w``-weight.  Because "smallest weight first" is not a global monomial
order, initial ideals are computed on the homogenization, where any
weight can be shifted by a multiple of the degree.
"""

from __future__ import annotations

import ast
import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence, Union

from .lattice import dot

Exponent = tuple[int, ...]


# ---------------------------------------------------------------- fields


@dataclass(frozen=True)
class FieldSpec:
    """Q when ``characteristic == 0``, otherwise the prime field F_p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or p == 1 or (p > 1 and any(p % d == 0 for d in range(2, int(p ** 0.5) + 1))):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``"Q"`` or ``"Fp:<p>"``."""
        text = text.strip()
        if text in ("Q", "QQ"):
            return cls(0)
        if text.startswith("Fp:"):
            return cls(int(text[3:]))
        raise ValueError(f"unknown field {text!r}; expected Q or Fp:<p>")

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}"

    def __call__(self, x) -> Union[Fraction, int]:
        p = self.characteristic
        if p == 0:
            return Fraction(x)
        x = Fraction(x)
        return x.numerator * pow(x.denominator, -1, p) % p

    def inv(self, x):
        p = self.characteristic
        if p == 0:
            return 1 / x
        return pow(x, -1, p)


QQ = FieldSpec(0)


# ---------------------------------------------------------------- monomial orders


class MonomialOrder:
    """A total monomial order given by a sort key on exponent tuples.

    ``key(e)`` returns a flat tuple of ints; larger key means larger
    monomial.  Every order here starts with a degree component or is an
    elimination order over grevlex, so all are global.
    """

    def __init__(self, signature: tuple, keyfunc):
        self.signature = signature
        self._keyfunc = keyfunc
        self._cache: dict[Exponent, tuple] = {}

    def key(self, e: Exponent) -> tuple:
        k = self._cache.get(e)
        if k is None:
            k = self._cache[e] = self._keyfunc(e)
        return k

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.signature == other.signature

    def __hash__(self):
        return hash(self.signature)

    def __repr__(self):
        return f"MonomialOrder{self.signature}"


def _grevlex_tail(e: Exponent) -> tuple:
    return tuple(-x for x in reversed(e))


_ORDERS: dict[tuple, MonomialOrder] = {}


def _order(signature, keyfunc) -> MonomialOrder:
    o = _ORDERS.get(signature)
    if o is None:
        o = _ORDERS[signature] = MonomialOrder(signature, keyfunc)
    return o


def grevlex(nvars: int) -> MonomialOrder:
    """Graded reverse lexicographic order with y1 > ... > ys."""
    return _order(("grevlex", nvars), lambda e: (sum(e),) + _grevlex_tail(e))


def min_weight_order(nvars: int, tiers: Sequence[Sequence[int]]) -> MonomialOrder:
    """Order on ``nvars`` variables (the last one a homogenizing variable).

    Compares by total degree, then by *smaller* weight under each tier in
    turn (the tiers ignore the last variable), then grevlex.  On
    homogeneous polynomials the leading terms are the lexicographically
    smallest-weight terms.
    """
    tiers = tuple(tuple(int(x) for x in w) for w in tiers)

    def key(e):
        return (sum(e),) + tuple(-dot(w, e) for w in tiers) + _grevlex_tail(e)

    return _order(("minweight", nvars, tiers), key)


def elimination_order(nvars: int) -> MonomialOrder:
    """Block order eliminating the last variable, grevlex on the others."""
    def key(e):
        head = e[:-1]
        return (e[-1], sum(head)) + _grevlex_tail(head)

    return _order(("elim-last", nvars), key)


# ---------------------------------------------------------------- polynomials


class Polynomial:
    """An element of ``K[y1..ys]``."""

    __slots__ = ("field", "nvars", "terms", "_hash")

    def __init__(self, field: FieldSpec, nvars: int, terms: Optional[Mapping[Exponent, object]] = None, *, _clean=False):
        self.field = field
        self.nvars = nvars
        if _clean:
            self.terms = terms
        else:
            out = {}
            for e, c in (terms or {}).items():
                e = tuple(int(x) for x in e)
                if len(e) != nvars or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent {e} for {nvars} variables")
                c = field(c)
                if c:
                    out[e] = out.get(e, 0) + c
                    if field.characteristic:
                        out[e] %= field.characteristic
                    if not out[e]:
                        del out[e]
            self.terms = out
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec, nvars: int) -> "Polynomial":
        return cls(field, nvars, {}, _clean=True)

    @classmethod
    def constant(cls, field: FieldSpec, nvars: int, c=1) -> "Polynomial":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, field: FieldSpec, exponent: Sequence[int], c=1) -> "Polynomial":
        return cls(field, len(exponent), {tuple(exponent): c})

    @classmethod
    def variable(cls, field: FieldSpec, nvars: int, i: int) -> "Polynomial":
        return cls.monomial(field, tuple(int(i == j) for j in range(nvars)))

    @classmethod
    def parse(cls, text: str, nvars: int, field: FieldSpec = QQ, prefix: str = "y") -> "Polynomial":
        """Parse an expression such as ``"y1*y3 - y2^2 + 3/2"``."""
        tree = ast.parse(text.replace("^", "**"), mode="eval")
        return _eval_ast(tree.body, nvars, field, prefix)

    # basic queries ------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    @property
    def support(self) -> list[Exponent]:
        return sorted(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def leading(self, order: MonomialOrder) -> tuple[Exponent, object]:
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def _check(self, other: "Polynomial"):
        if self.field != other.field or self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    # arithmetic ---------------------------------------------------------

    def _combine(self, other: "Polynomial", sign: int) -> "Polynomial":
        self._check(other)
        p = self.field.characteristic
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + sign * c
            if p:
                v %= p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.field, self.nvars, out, _clean=True)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.field, self.nvars, other)
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.field, self.nvars, other)
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "Polynomial":
        c = self.field(c)
        if not c:
            return Polynomial.zero(self.field, self.nvars)
        p = self.field.characteristic
        if p:
            terms = {e: v * c % p for e, v in self.terms.items()}
        else:
            terms = {e: v * c for e, v in self.terms.items()}
        return Polynomial(self.field, self.nvars, terms, _clean=True)

    def shift(self, e: Exponent, c=1) -> "Polynomial":
        """Multiply by the term ``c * y^e``."""
        p = self.field.characteristic
        terms = {}
        for f, v in self.terms.items():
            w = v * c
            if p:
                w %= p
            terms[tuple(a + b for a, b in zip(e, f))] = w
        return Polynomial(self.field, self.nvars, terms, _clean=True)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        p = self.field.characteristic
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if p:
                    v %= p
                out[e] = v
        return Polynomial(self.field, self.nvars, {e: c for e, c in out.items() if c}, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial.constant(self.field, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def monic(self, order: MonomialOrder) -> "Polynomial":
        _, c = self.leading(order)
        return self.scale(self.field.inv(c))

    def derivative(self, i: int) -> "Polynomial":
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                terms[tuple(f)] = c * e[i]
        return Polynomial(self.field, self.nvars, terms)

    def evaluate(self, point: Sequence):
        total = self.field(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                v = v * x ** k
            total += v
        if self.field.characteristic:
            total %= self.field.characteristic
        return total

    # weights ------------------------------------------------------------

    def nu(self, w: Sequence) -> Union[int, Fraction, float]:
        """Minimal ``w``-weight over the support (``inf`` for zero)."""
        if not self.terms:
            return float("inf")
        return min(dot(w, e) for e in self.terms)

    def initial_form(self, w: Sequence) -> "Polynomial":
        if not self.terms:
            return self
        m = self.nu(w)
        return Polynomial(self.field, self.nvars, {e: c for e, c in self.terms.items() if dot(w, e) == m}, _clean=True)

    # variable changes ---------------------------------------------------

    def homogenize(self) -> "Polynomial":
        """Homogenize with a new last variable."""
        d = self.degree()
        return Polynomial(self.field, self.nvars + 1, {e + (d - sum(e),): c for e, c in self.terms.items()}, _clean=True)

    def dehomogenize(self) -> "Polynomial":
        """Set the last variable to 1."""
        return Polynomial(self.field, self.nvars - 1, {e[:-1]: c for e, c in self.terms.items()})

    def extend(self, nvars: int) -> "Polynomial":
        """The same polynomial in a ring with extra trailing variables."""
        pad = (0,) * (nvars - self.nvars)
        return Polynomial(self.field, nvars, {e + pad: c for e, c in self.terms.items()}, _clean=True)

    def with_field(self, field: FieldSpec) -> "Polynomial":
        return Polynomial(field, self.nvars, self.terms)

    # comparison / display -----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if self.is_constant():
                return self.terms.get((0,) * self.nvars, 0) == other
            return NotImplemented
        return self.field == other.field and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.nvars, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self, order: Optional[MonomialOrder] = None) -> list[tuple[Exponent, object]]:
        order = order or grevlex(self.nvars)
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def to_string(self, prefix: str = "y") -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"{prefix}{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            c = Fraction(c)
            neg = c < 0
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            parts.append(("- " if neg else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r})"


def _eval_ast(node, nvars, field, prefix) -> Polynomial:
    if isinstance(node, ast.BinOp):
        a = _eval_ast(node.left, nvars, field, prefix)
        if isinstance(node.op, ast.Pow):
            if not isinstance(node.right, ast.Constant) or not isinstance(node.right.value, int):
                raise ValueError("exponents must be integer literals")
            return a ** node.right.value
        b = _eval_ast(node.right, nvars, field, prefix)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            if not b.is_constant() or not b:
                raise ValueError("can only divide by nonzero constants")
            return a.scale(field.inv(b.terms[(0,) * nvars]))
        raise ValueError(f"unsupported operator {node.op}")
    if isinstance(node, ast.UnaryOp):
        a = _eval_ast(node.operand, nvars, field, prefix)
        if isinstance(node.op, ast.USub):
            return -a
        if isinstance(node.op, ast.UAdd):
            return a
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Polynomial.constant(field, nvars, node.value)
    if isinstance(node, ast.Name) and node.id.startswith(prefix) and node.id[len(prefix):].isdigit():
        i = int(node.id[len(prefix):]) - 1
        if not 0 <= i < nvars:
            raise ValueError(f"variable {node.id} out of range")
        return Polynomial.variable(field, nvars, i)
    raise ValueError(f"cannot parse {ast.dump(node)}")


# ---------------------------------------------------------------- division and Buchberger


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


class _Basis:
    """Polynomials with cached leading data for repeated division."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.polys: list[Polynomial] = []
        self.lead: list[Exponent] = []
        self.lc_inv: list = []

    def append(self, g: Polynomial):
        e, c = g.leading(self.order)
        self.polys.append(g)
        self.lead.append(e)
        self.lc_inv.append(g.field.inv(c))

    def reduce(self, f: Polynomial, skip: int = -1, full: bool = True) -> Polynomial:
        """Remainder of ``f`` on division by the basis (element ``skip`` excluded)."""
        order = self.order
        p = f.field.characteristic
        work = dict(f.terms)
        rem = {}
        heap = [tuple(-x for x in order.key(e)) + (e,) for e in work]
        heapq.heapify(heap)
        lead, polys, lc_inv = self.lead, self.polys, self.lc_inv
        while heap:
            item = heapq.heappop(heap)
            e = item[-1]
            c = work.pop(e, None)
            if c is None:
                continue
            while heap and heap[0][-1] == e:
                heapq.heappop(heap)
            for i, le in enumerate(lead):
                if i != skip and _divides(le, e):
                    q = c * lc_inv[i]
                    if p:
                        q %= p
                    shift = tuple(a - b for a, b in zip(e, le))
                    for ge, gc in polys[i].terms.items():
                        if ge == le:
                            continue
                        t = tuple(a + b for a, b in zip(ge, shift))
                        old = work.get(t)
                        v = (0 if old is None else old) - q * gc
                        if p:
                            v %= p
                        if v:
                            work[t] = v
                            if old is None:
                                heapq.heappush(heap, tuple(-x for x in order.key(t)) + (t,))
                        elif old is not None:
                            del work[t]
                    break
            else:
                rem[e] = c
                if not full:
                    rem.update(work)
                    break
        return Polynomial(f.field, f.nvars, rem, _clean=True)


def normal_form(f: Polynomial, gb: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> Polynomial:
    """Remainder of multivariate division of ``f`` by ``gb``."""
    order = order or grevlex(f.nvars)
    basis = _Basis(order)
    for g in gb:
        if g:
            basis.append(g)
    return basis.reduce(f)


def _spoly(f, ef, g, eg, order):
    l = _lcm(ef, eg)
    _, cf = f.leading(order)
    _, cg = g.leading(order)
    a = f.shift(tuple(x - y for x, y in zip(l, ef)), f.field.inv(cf))
    b = g.shift(tuple(x - y for x, y in zip(l, eg)), g.field.inv(cg))
    return a - b


def buchberger(gens: Iterable[Polynomial], order: Optional[MonomialOrder] = None) -> list[Polynomial]:
    """Reduced Groebner basis (monic, sorted by leading term, largest first)."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    order = order or grevlex(gens[0].nvars)
    basis = _Basis(order)
    for g in gens:
        r = basis.reduce(g)
        if r:
            basis.append(r.monic(order))
    pairs = []

    def add_pairs(j):
        lj = basis.lead[j]
        for i in range(j):
            li = basis.lead[i]
            l = _lcm(li, lj)
            heapq.heappush(pairs, (order.key(l), i, j, l))

    for j in range(1, len(basis.polys)):
        add_pairs(j)
    done = set()
    while pairs:
        _, i, j, l = heapq.heappop(pairs)
        li, lj = basis.lead[i], basis.lead[j]
        done.add((i, j))
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        # chain criterion
        if any(
            k not in (i, j)
            and _divides(basis.lead[k], l)
            and (min(i, k), max(i, k)) in done
            and (min(j, k), max(j, k)) in done
            for k in range(len(basis.polys))
        ):
            continue
        s = _spoly(basis.polys[i], li, basis.polys[j], lj, order)
        r = basis.reduce(s)
        if r:
            basis.append(r.monic(order))
            add_pairs(len(basis.polys) - 1)
    return _interreduce(basis.polys, order)


def _interreduce(polys: Sequence[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    leads = [p.leading(order)[0] for p in polys]
    keep = []
    for i, (p, e) in enumerate(zip(polys, leads)):
        if any(j != i and _divides(leads[j], e) and (leads[j] != e or j < i) for j in range(len(polys))):
            continue
        keep.append(p)
    basis = _Basis(order)
    for p in keep:
        basis.append(p)
    out = []
    for i, p in enumerate(keep):
        out.append(basis.reduce(p, skip=i).monic(order))
    out.sort(key=lambda g: order.key(g.leading(order)[0]), reverse=True)
    return out


# ---------------------------------------------------------------- ideals


@dataclass(frozen=True)
class WeightOrder:
    """A nonnegative weight with optional tie-breaking refinement tiers.

    Refinements may have any sign: ``(w, (d1, d2, ...))`` stands for the
    weight ``w + e*d1 + e^2*d2 + ...`` with ``e`` infinitesimal.  Remaining
    ties are broken by grevlex.
    """

    weight: tuple[int, ...]
    refinements: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "weight", tuple(int(x) for x in self.weight))
        object.__setattr__(self, "refinements", tuple(tuple(int(x) for x in r) for r in self.refinements))
        if any(x < 0 for x in self.weight):
            raise ValueError("weight entries must be nonnegative")

    @property
    def tiers(self) -> tuple[tuple[int, ...], ...]:
        return (self.weight,) + self.refinements

    def weigh(self, e: Exponent) -> tuple[int, ...]:
        return tuple(dot(w, e) for w in self.tiers)


def as_weight_order(w) -> WeightOrder:
    return w if isinstance(w, WeightOrder) else WeightOrder(tuple(w))


def initial_form_tiers(f: Polynomial, w: WeightOrder) -> Polynomial:
    """Terms of ``f`` whose tier weights are lexicographically minimal."""
    if not f:
        return f
    m = min(w.weigh(e) for e in f.terms)
    return Polynomial(f.field, f.nvars, {e: c for e, c in f.terms.items() if w.weigh(e) == m}, _clean=True)


class Ideal:
    """An ideal of ``K[y1..ys]`` given by generators, with memoized bases."""

    def __init__(self, field: FieldSpec, nvars: int, generators: Iterable[Polynomial] = ()):
        self.field = field
        self.nvars = nvars
        gens = []
        for g in generators:
            if g.field != field or g.nvars != nvars:
                raise ValueError("generator not in the ambient ring")
            if g:
                gens.append(g)
        self.generators = tuple(gens)
        self._gb: dict = {}
        self._marked: dict = {}

    @classmethod
    def parse(cls, texts: Sequence[str], nvars: int, field: FieldSpec = QQ) -> "Ideal":
        return cls(field, nvars, [Polynomial.parse(t, nvars, field) for t in texts])

    def groebner_basis(self, order: Optional[MonomialOrder] = None) -> tuple[Polynomial, ...]:
        order = order or grevlex(self.nvars)
        gb = self._gb.get(order.signature)
        if gb is None:
            gb = self._gb[order.signature] = tuple(buchberger(self.generators, order))
        return gb

    @cached_property
    def canonical(self) -> tuple:
        """Hashable canonical form: the reduced grevlex basis."""
        order = grevlex(self.nvars)
        return tuple(tuple(g.sorted_terms(order)) for g in self.groebner_basis(order))

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.groebner_basis())

    def __contains__(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.generators

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    def __hash__(self):
        return hash(self.canonical)

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.field, self.nvars, self.generators + other.generators)

    def __repr__(self):
        return "Ideal(" + ", ".join(g.to_string() for g in self.generators) + ")"

    def marked_basis(self, w) -> list[tuple[Polynomial, Polynomial]]:
        return marked_basis(self, w)


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    if a.field != b.field or a.nvars != b.nvars:
        raise ValueError("ideals live in different rings")
    return a.canonical == b.canonical


def marked_basis(ideal: Ideal, w) -> list[tuple[Polynomial, Polynomial]]:
    """Pairs ``(g, in_w(g))`` over a basis of ``ideal`` for an order refining ``w``.

    The basis is the dehomogenized reduced Groebner basis of the
    homogenization for the MIN-weight order; the initial forms of its
    elements generate ``in_w(ideal)``.
    """
    w = as_weight_order(w)
    key = w.tiers
    cached = ideal._marked.get(key)
    if cached is not None:
        return cached
    s = ideal.nvars
    for t in w.tiers:
        if len(t) != s:
            raise ValueError("weight length does not match the number of variables")
    if ideal.is_zero():
        out = []
    else:
        # homogenizing a degree-compatible basis generates the homogenization
        hom = [g.homogenize() for g in ideal.groebner_basis()]
        tiers = [t + (0,) for t in w.tiers]
        order = min_weight_order(s + 1, tiers)
        out = []
        for g in buchberger(hom, order):
            d = g.dehomogenize()
            out.append((d, initial_form_tiers(d, w)))
    ideal._marked[key] = out
    return out


def initial_ideal(ideal: Ideal, w) -> Ideal:
    """``in_w(ideal)``: the ideal of minimal-weight parts of its elements."""
    w = as_weight_order(w)
    return Ideal(ideal.field, ideal.nvars, [i for _, i in marked_basis(ideal, w)])


def saturate(ideal: Ideal, m: Polynomial) -> Ideal:
    """``ideal : m^inf`` by eliminating ``t`` from ``ideal + (1 - t m)``."""
    if not m.is_monomial():
        raise ValueError("saturate expects a monomial")
    s = ideal.nvars
    if ideal.is_zero():
        return ideal
    if m.is_constant():
        return ideal
    ext = [g.extend(s + 1) for g in ideal.groebner_basis()]
    (e, _), = m.terms.items()
    ext.append(Polynomial(ideal.field, s + 1, {(0,) * (s + 1): 1, e + (1,): -1}))
    gb = buchberger(ext, elimination_order(s + 1))
    kept = [Polynomial(ideal.field, s, {f[:-1]: c for f, c in g.terms.items()}, _clean=True) for g in gb if all(f[-1] == 0 for f in g.terms)]
    return Ideal(ideal.field, s, kept)


def coordinate_product(field: FieldSpec, nvars: int, indices: Optional[Iterable[int]] = None) -> Polynomial:
    idx = set(range(nvars)) if indices is None else set(indices)
    return Polynomial.monomial(field, tuple(int(i in idx) for i in range(nvars)))


def saturate_torus(ideal: Ideal) -> Ideal:
    """Saturation by the product of all variables."""
    return saturate(ideal, coordinate_product(ideal.field, ideal.nvars))


def krull_dimension(ideal: Ideal) -> int:
    """Dimension of ``V(ideal)``; -1 for the unit ideal."""
    if ideal.is_zero():
        return ideal.nvars
    if ideal.is_unit():
        return -1
    order = grevlex(ideal.nvars)
    leads = [g.leading(order)[0] for g in ideal.groebner_basis(order)]
    supports = [frozenset(i for i, x in enumerate(e) if x) for e in leads]
    s = ideal.nvars
    for size in range(s, -1, -1):
        for subset in combinations(range(s), size):
            free = frozenset(subset)
            if not any(sup <= free for sup in supports):
                return size
    return 0


def contains_monomial(ideal: Ideal) -> bool:
    return saturate_torus(ideal).is_unit()


def jacobian(gens: Sequence[Polynomial]) -> list[list[Polynomial]]:
    if not gens:
        return []
    return [[g.derivative(i) for i in range(g.nvars)] for g in gens]


def minors(matrix: Sequence[Sequence[Polynomial]], size: int, field: FieldSpec, nvars: int) -> list[Polynomial]:
    """All nonzero ``size x size`` minors (Laplace expansion with memoization)."""
    if size == 0:
        return [Polynomial.constant(field, nvars)]
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    memo: dict = {}

    def det(r: tuple, c: tuple) -> Polynomial:
        k = (r, c)
        if k in memo:
            return memo[k]
        if len(r) == 1:
            out = matrix[r[0]][c[0]]
        else:
            out = Polynomial.zero(field, nvars)
            for j, col in enumerate(c):
                a = matrix[r[0]][col]
                if a:
                    sub = det(r[1:], c[:j] + c[j + 1:])
                    if sub:
                        term = a * sub
                        out = out + term if j % 2 == 0 else out - term
        memo[k] = out
        return out

    out = []
    for r in combinations(range(rows), size):
        for c in combinations(range(cols), size):
            d = det(r, c)
            if d:
                out.append(d)
    return out
