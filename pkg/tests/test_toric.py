from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from helpers import a1_spec, ring, ring_names, sigma_points, toric_polys, y_polys
from oracles import (
    Arith,
    in_phi_sigma_oracle,
    lattice_kernel_binomials,
    lift_monomial,
    psi,
    sympy_grevlex_basis,
    toric_initial_oracle,
)
from toric_gfan.cones import Cone
from toric_gfan.polynomials import QQ, Ideal, Polynomial, contains_monomial, initial_ideal
from toric_gfan.toric import (
    ToricIdealSpec,
    ToricPolynomial,
    ToricRing,
    initial_form,
    lift_ideal,
    lift_improvements,
    max_weight_lift,
    nu,
    phi,
    phi_pullback,
    polynomial_initial_ideal,
    psi_apply,
    toric_ideal,
    toric_initial_ideal,
    toric_ideal_equal,
    trop_membership,
)

A1 = ring("A1")


def x(*alpha, c=1, R=A1):
    return ToricPolynomial(R, {alpha: c})


def Y(text, R=A1):
    return R.y(text)


def spec(*gens, R=A1):
    return ToricIdealSpec(R, tuple(gens))


def as_dict(f):
    return {e: Fraction(c) for e, c in f.terms.items()}


# ---------------------------------------------------------------- examples


def test_ring_data():
    assert A1.hilbert == ((1, 0), (1, 1), (1, 2))
    assert A1.mmatrix == ((1, 1, 1), (0, 1, 2))
    assert ring("cubic").hilbert == ((1, 0), (1, 1), (1, 2), (1, 3))
    with pytest.raises(ValueError):
        ToricPolynomial(A1, {(-1, 0): 1})


def test_nu_and_initial_form():
    f = x(1, 0) + x(1, 2)
    assert nu((0, 1), ToricPolynomial(A1, {})) == float("inf")
    assert nu((0, 1), f) == 0
    assert nu((1, 0), f) == 1
    assert initial_form((0, 1), f) == x(1, 0)
    assert initial_form((1, 0), f) == f
    assert not initial_form((1, 0), ToricPolynomial(A1, {}))
    with pytest.raises(ValueError):
        nu((-1, 0), f)


def test_phi_examples():
    assert phi(A1, (0, 0)) == (0, 0, 0)
    assert phi(A1, (0, 1)) == (0, 1, 2)
    assert phi(A1, (2, -1)) == (2, 1, 0)


def test_phi_pullback_examples():
    assert phi_pullback(A1, Cone.orthant(3)) == A1.sigma
    # {w1 <= w3, w2 <= w3}
    c = Cone.from_generators([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])
    assert phi_pullback(A1, c) == Cone.from_generators([(0, 1), (1, 0)])
    c = Cone.from_generators([(1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1)])
    assert phi_pullback(A1, c) == Cone.from_generators([(1, 0), (2, -1)])


def test_psi_examples():
    assert psi_apply(A1, Y("y2")) == x(1, 1)
    assert not psi_apply(A1, Y("y1*y3 - y2^2"))
    assert psi_apply(A1, Y("y1 + y3")) == x(1, 0) + x(1, 2)


def test_toric_ideal_examples():
    assert toric_ideal(ring("orthant")).is_zero()
    assert toric_ideal(A1) == Ideal.parse(["y1*y3 - y2^2"], 3)
    R = ring("cubic")
    I = toric_ideal(R)
    assert I == Ideal.parse(["y1*y3 - y2^2", "y2*y4 - y3^2", "y1*y4 - y2*y3"], 4)
    for g in I.groebner_basis():
        assert not R.psi(g)
    from toric_gfan.polynomials import krull_dimension

    assert krull_dimension(I) == 2


def test_lift_ideal_examples():
    assert lift_ideal(spec()) == A1.toric_ideal
    assert lift_ideal(spec(x(1, 0) + x(1, 2))) == Ideal.parse(["y1 + y3", "y1*y3 - y2^2"], 3)
    assert lift_ideal(spec(x(1, 1))) == Ideal.parse(["y2", "y1*y3 - y2^2"], 3)


def test_toric_initial_ideal_examples():
    J = spec(x(1, 0) + x(1, 2))
    assert toric_ideal_equal(toric_initial_ideal(J, (0, 1)), spec(x(1, 0), x(2, 2)))
    assert toric_ideal_equal(toric_initial_ideal(J, (1, 0)), J)
    assert toric_ideal_equal(toric_initial_ideal(J, (2, -1)), spec(x(1, 2), x(2, 2)))


def test_max_weight_lift_examples():
    f = x(1, 0) + x(1, 2)
    assert max_weight_lift(f, (0, 1), Y("y1 + y3")) == Y("y1 + y3")
    g = x(4, 0)
    steps = list(lift_improvements(g, (1, 0), Y("y1*y3 - y2^2 + y1^4")))
    assert len(steps) == 2
    w = A1.phi((1, 0))
    assert [h.nu(w) for h in steps] == [2, 4]
    assert steps[-1] == Y("y1^4")
    h = max_weight_lift(x(1, 1), (3, 1))
    assert h == Y("y2") and h.nu(A1.phi((3, 1))) == 4


def test_trop_examples():
    I = A1.toric_ideal
    assert trop_membership(I, (0, 1, 2))
    assert not trop_membership(I, (1, 0, 0))
    assert trop_membership(Ideal(QQ, 3), (5, 1, 0))


# ---------------------------------------------------------------- properties


@settings(max_examples=30, deadline=None)
@given(ring_names)
def test_toric_ideal_matches_binomial_oracle(name):
    R = ring(name)
    oracle = sympy_grevlex_basis(lattice_kernel_binomials(R.hilbert), R.s)
    ours = {frozenset(as_dict(g).items()) for g in R.toric_ideal.groebner_basis()}
    assert ours == {frozenset(g.items()) for g in oracle}


@settings(max_examples=30, deadline=None)
@given(ring_names)
def test_hilbert_basis_oracle(name):
    from oracles import hilbert_basis_oracle

    R = ring(name)
    assert sorted(R.hilbert) == hilbert_basis_oracle(R.sigma_dual.rays)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_monomial_valuation_identity(data):
    R = ring(data.draw(ring_names))
    v = data.draw(sigma_points(R))
    gamma = tuple(data.draw(st.integers(0, 4)) for _ in range(R.s))
    h = Polynomial.monomial(R.field, gamma)
    assert h.nu(R.phi(v)) == nu(v, R.psi(h))


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_valuation_inequality(data):
    R = ring(data.draw(ring_names))
    v = data.draw(sigma_points(R))
    h = data.draw(y_polys(R))
    w = R.phi(v)
    lhs, rhs = h.nu(w), nu(v, R.psi(h))
    assert lhs <= rhs
    assert (lhs < rhs) == (not R.psi(h.initial_form(w)))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_initial_of_toric_ideal_is_itself(data):
    R = ring(data.draw(ring_names))
    v = data.draw(sigma_points(R))
    assert initial_ideal(R.toric_ideal, R.phi(v)) == R.toric_ideal


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_trop_is_phi_sigma(data):
    R = ring(data.draw(st.sampled_from(["A1", "cubic"])))
    w = tuple(data.draw(st.integers(0, 6)) for _ in range(R.s))
    inside = in_phi_sigma_oracle(R.sigma.rays, R.hilbert, w)
    assert R.in_phi_sigma(w) == inside
    assert trop_membership(R.toric_ideal, w) == inside


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_max_weight_lift_property(data):
    R = ring(data.draw(ring_names))
    v = data.draw(sigma_points(R))
    f = data.draw(toric_polys(R))
    # start from a deliberately poor lift: add a random element of I_sigma
    junk = R.y("0")
    for g in R.toric_ideal.generators:
        junk = junk + g * data.draw(y_polys(R, 2, 2))
    start = R.lift(f) + junk
    h = max_weight_lift(f, v, start)
    w = R.phi(v)
    assert R.psi(h) == f
    assert h.nu(w) == nu(v, f)
    assert R.psi(h.initial_form(w)) == initial_form(v, f)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_toric_initial_matches_truncated_oracle(data):
    R = ring(data.draw(ring_names))
    J = ToricIdealSpec(R, tuple(data.draw(st.lists(toric_polys(R), min_size=1, max_size=2))))
    v = data.draw(sigma_points(R, 6))
    lifted = [{lift_monomial(R.hilbert, a): Fraction(c) for a, c in f.terms.items()} for f in J.generators]
    lifted += lattice_kernel_binomials(R.hilbert)
    forms = toric_initial_oracle(R.hilbert, lifted, v, degree=5)
    oracle = Ideal(R.field, R.s, [R.lift(ToricPolynomial(R, f)) for f in forms] + list(R.toric_ideal.generators))
    assert oracle == polynomial_initial_ideal(J, v)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_toric_initial_scaling(data):
    R = ring(data.draw(ring_names))
    J = ToricIdealSpec(R, (data.draw(toric_polys(R)),))
    v = data.draw(sigma_points(R, 5))
    lam = data.draw(st.integers(2, 4))
    assert toric_ideal_equal(toric_initial_ideal(J, v), toric_initial_ideal(J, tuple(lam * x for x in v)))
