from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from helpers import a1_spec, box_points, ring, ring_names, sigma_points, toric_polys
from oracles import (
    TRUNC_DEGREE,
    exhaustive_chambers_2d,
    lattice_kernel_binomials,
    lift_monomial,
    truncated_toric_elements,
    weighted_initial_forms,
    Arith,
)
from toric_gfan.cones import Cone, Fan, Position, check_fan, contains
from toric_gfan.gfan import groebner_cone, restricted_groebner_fan, same_class
from toric_gfan.polynomials import Ideal, marked_basis
from toric_gfan.toric import ToricIdealSpec, ToricPolynomial, ToricRing, lift_ideal, polynomial_initial_ideal, toric_ideal_equal, toric_initial_ideal


def cone(*rays):
    return Cone.from_generators(rays)


def relint_cone(fan: Fan, v):
    return next(c for c in fan.cones if contains(c, v) is Position.RELATIVE_INTERIOR)


@st.composite
def specs(draw, names=ring_names, max_gens=2):
    R = ring(draw(names))
    gens = draw(st.lists(toric_polys(R, max_terms=4, min_terms=2), min_size=1, max_size=max_gens))
    return ToricIdealSpec(R, tuple(gens))


# ---------------------------------------------------------------- examples


def test_groebner_cone_examples():
    R = ring("A1")
    assert groebner_cone(Ideal.parse(["y1"], 3), (1, 2, 3)) == Cone.orthant(3)
    J = Ideal.parse(["y1+y3", "y1*y3-y2^2"], 3)
    assert groebner_cone(J, (0, 1, 2)) == cone((0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1))
    assert groebner_cone(J, (2, 1, 0)) == cone((1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1))


def test_monomial_ideal_single_class():
    J = a1_spec(terms=((1, 1),))
    g = restricted_groebner_fan(J)
    assert g.fan.maximal == (ring("A1").sigma,)


def test_a1_fan():
    g = restricted_groebner_fan(a1_spec())
    assert set(g.fan.maximal) == {cone((0, 1), (1, 0)), cone((1, 0), (2, -1))}
    assert g.fan.rays == ((0, 1), (1, 0), (2, -1))


def test_a1_fan_with_middle_term():
    g = restricted_groebner_fan(a1_spec(terms=((1, 0), (1, 1), (1, 2))))
    assert set(g.fan.maximal) == {cone((0, 1), (1, 0)), cone((1, 0), (2, -1))}


def test_same_class_examples():
    J = a1_spec()
    assert same_class(J, (1, 1), (1, 1))
    assert same_class(J, (0, 1), (1, 1))
    assert not same_class(J, (0, 1), (2, -1))


def test_three_dimensional_fan():
    R = ToricRing.from_rays([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    J = ToricIdealSpec(R, (ToricPolynomial(R, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 2): 1}),))
    g = restricted_groebner_fan(J)
    assert check_fan(g.fan, R.sigma) == []
    assert len(g.fan.maximal) == 3
    for v in [(1, 2, 3), (3, 1, 1), (2, 2, 1), (1, 1, 1), (0, 0, 0)]:
        c = relint_cone(g.fan, v)
        assert toric_ideal_equal(g.payload(c), toric_initial_ideal(J, v))


# ---------------------------------------------------------------- properties


@settings(max_examples=25, deadline=None)
@given(specs())
def test_fan_axioms(J):
    g = restricted_groebner_fan(J)
    assert check_fan(g.fan, J.ring.sigma) == []
    # distinct maximal cones carry distinct initial ideals
    payloads = [m.initial_ideal() for m in g.marked]
    assert len(set(payloads)) == len(payloads)


@settings(max_examples=10, deadline=None)
@given(specs(), st.randoms())
def test_sampling_consistency(J, rnd):
    g = restricted_groebner_fan(J)
    pts = rnd.sample(box_points(J.ring, 10), 20)
    for v in pts:
        c = relint_cone(g.fan, v)
        assert toric_ideal_equal(g.payload(c), toric_initial_ideal(J, v))


@settings(max_examples=25, deadline=None)
@given(specs(), st.data())
def test_class_biconditional(J, data):
    R = J.ring
    g = restricted_groebner_fan(J)
    v1 = data.draw(sigma_points(R, 6))
    v2 = data.draw(sigma_points(R, 6))
    toric_side = toric_ideal_equal(toric_initial_ideal(J, v1), toric_initial_ideal(J, v2))
    assert same_class(J, v1, v2) == toric_side
    if relint_cone(g.fan, v1) == relint_cone(g.fan, v2):
        assert toric_side


def _oracle_fan(J, max_degree=8):
    """Fan obtained by refining sigma along every tie line, then merging equal neighbours.

    The truncation is raised until it covers, at every chamber point, the
    top degree of a Groebner basis there; past that degree the truncated
    initial forms generate the whole initial ideal.  Returns None when that
    needs more than ``max_degree``.
    """
    R = J.ring
    lifted = [{lift_monomial(R.hilbert, a): Fraction(c) for a, c in f.terms.items()} for f in J.generators]
    lifted += lattice_kernel_binomials(R.hilbert)
    ideal = lift_ideal(J)
    degree = TRUNC_DEGREE
    while True:
        elements = truncated_toric_elements(R.hilbert, lifted, degree=degree)
        chambers = exhaustive_chambers_2d(R.sigma.rays, elements)
        points = [tuple(a + b for a, b in zip(*ch)) for ch in chambers]
        needed = max(b.degree() for v in points for b, _ in marked_basis(ideal, R.phi(v)))
        if needed <= degree:
            break
        if needed > max_degree:
            return None
        degree = needed

    def classify(v):
        forms = weighted_initial_forms(elements, v, Arith())
        return Ideal(R.field, R.s, [R.lift(ToricPolynomial(R, f)) for f in forms] + list(R.toric_ideal.generators))

    merged = []
    for ch, v in zip(chambers, points):
        ideal_v = classify(v)
        if merged and merged[-1][1] == ideal_v:
            merged[-1] = ((merged[-1][0][0], ch[1]), ideal_v)
        else:
            merged.append((ch, ideal_v))
    return {cone(*ch) for ch, _ in merged}


@settings(max_examples=15, deadline=None)
@given(specs(max_gens=2))
def test_matches_exhaustive_oracle(J):
    g = restricted_groebner_fan(J)
    assume(len(g.fan.rays) - 2 <= 8)
    oracle = _oracle_fan(J)
    assume(oracle is not None)
    assert set(g.fan.maximal) == oracle
