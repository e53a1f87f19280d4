"""Catalog rings and hypothesis strategies shared across test modules."""

import itertools

from hypothesis import assume
from hypothesis import strategies as st

from oracles import CATALOG
from toric_gfan.cones import Position, contains
from toric_gfan.polynomials import QQ, Polynomial
from toric_gfan.toric import ToricIdealSpec, ToricPolynomial, ToricRing

_RINGS: dict = {}


def ring(name: str, field=QQ) -> ToricRing:
    key = (name, field)
    if key not in _RINGS:
        _RINGS[key] = ToricRing.from_rays(CATALOG[name], field)
    return _RINGS[key]


def a1_spec(terms=((1, 0), (1, 2)), coeffs=None, field=QQ) -> ToricIdealSpec:
    R = ring("A1", field)
    coeffs = coeffs or [1] * len(terms)
    return ToricIdealSpec(R, (ToricPolynomial(R, dict(zip(terms, coeffs))),))


ring_names = st.sampled_from(sorted(CATALOG))


def box_points(R: ToricRing, bound=10, nonzero=False) -> list:
    """Lattice points of sigma with coordinates bounded by ``bound``."""
    key = ("pts", R.sigma, bound, nonzero)
    if key not in _RINGS:
        pts = [
            v
            for v in itertools.product(range(-bound, bound + 1), repeat=R.n)
            if contains(R.sigma, v) is not Position.OUTSIDE and (any(v) or not nonzero)
        ]
        _RINGS[key] = pts
    return _RINGS[key]


def sigma_points(R: ToricRing, bound=10, nonzero=False):
    return st.sampled_from(box_points(R, bound, nonzero))


@st.composite
def toric_polys(draw, R: ToricRing, max_terms=3, max_degree=2, constant=False, min_terms=1):
    """Random elements of the toric ring with exponents of bounded Hilbert-basis degree."""
    n = draw(st.integers(min_terms, max_terms))
    terms = {}
    for _ in range(n):
        d = draw(st.integers(0 if constant else 1, max_degree))
        gamma = [0] * R.s
        for i in draw(st.lists(st.integers(0, R.s - 1), min_size=d, max_size=d)):
            gamma[i] += 1
        terms[R.image(gamma)] = draw(st.sampled_from([-3, -2, -1, 1, 2, 3]))
    return ToricPolynomial(R, terms)


@st.composite
def y_polys(draw, R: ToricRing, max_terms=4, max_degree=3):
    n = draw(st.integers(1, max_terms))
    terms = {}
    for _ in range(n):
        gamma = tuple(draw(st.integers(0, max_degree)) for _ in range(R.s))
        if sum(gamma) <= max_degree:
            terms[gamma] = draw(st.integers(-3, 3))
    h = Polynomial(R.field, R.s, terms)
    assume(h)
    return h
