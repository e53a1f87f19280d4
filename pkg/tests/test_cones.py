import itertools
from functools import lru_cache

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import hilbert_basis_oracle
from toric_gfan.cones import (
    Cone,
    Fan,
    Position,
    check_fan,
    common_refinement,
    contains,
    dd_intersect,
    dual_cone,
    hilbert_basis,
    is_smooth,
    regularize,
    relative_interior_point,
)
from toric_gfan.lattice import cone_index, det, primitive


def cone(*rays):
    return Cone.from_generators(rays)


A1 = cone((0, 1), (2, -1))


# ---------------------------------------------------------------- strategies


@st.composite
def cones_2d(draw, bound=6):
    a = draw(st.tuples(st.integers(-bound, bound), st.integers(-bound, bound)))
    b = draw(st.tuples(st.integers(-bound, bound), st.integers(-bound, bound)))
    assume(a[0] * b[1] - a[1] * b[0] != 0)
    return cone(a, b)


@st.composite
def cones_3d(draw, bound=3):
    # rays with positive last coordinate keep the cone pointed
    rays = draw(
        st.lists(
            st.tuples(st.integers(-bound, bound), st.integers(-bound, bound), st.integers(1, bound)),
            min_size=3,
            max_size=5,
            unique=True,
        )
    )
    c = Cone.from_generators(rays)
    assume(c.dim == 3)
    return c


def lattice_points(c: Cone, bound: int):
    n = c.ambient
    for p in itertools.product(range(-bound, bound + 1), repeat=n):
        if any(p) and contains(c, p) != Position.OUTSIDE:
            yield p


def representable(H, c: Cone, p, height):
    """Bounded search for ``p`` as a nonnegative integer combination of ``H``."""

    @lru_cache(maxsize=None)
    def rec(q):
        if not any(q):
            return True
        for h in H:
            r = tuple(x - y for x, y in zip(q, h))
            if contains(c, r) != Position.OUTSIDE and height(r) < height(q) and rec(r):
                return True
        return False

    return rec(tuple(p))


# ---------------------------------------------------------------- examples


def test_cone_normalization():
    c = Cone.from_generators([(2, 0), (1, 1), (0, 3), (1, 0)])
    assert c.rays == ((0, 1), (1, 0))
    with pytest.raises(ValueError):
        Cone.from_generators([(1, 0), (-1, 0)])


def test_dual_examples():
    assert dual_cone(Cone.orthant(2)) == Cone.orthant(2)
    assert dual_cone(A1) == cone((1, 0), (1, 2))
    assert dual_cone(cone((1, 0), (1, 3))) == cone((0, 1), (3, -1))


def test_hilbert_examples():
    assert hilbert_basis(Cone.orthant(2)) == [(0, 1), (1, 0)]
    assert sorted(hilbert_basis(cone((1, 0), (1, 2)))) == [(1, 0), (1, 1), (1, 2)]
    assert sorted(hilbert_basis(cone((1, 0), (1, 3)))) == [(1, 0), (1, 1), (1, 2), (1, 3)]


def test_contains_examples():
    assert contains(Cone.orthant(2), (1, 1)) == Position.RELATIVE_INTERIOR
    assert contains(A1, (1, 0)) == Position.RELATIVE_INTERIOR
    assert contains(A1, (2, -1)) == Position.BOUNDARY
    assert contains(A1, (-1, 0)) == Position.OUTSIDE


def test_relative_interior_point_examples():
    assert relative_interior_point(cone((1, 0))) == (1, 0)
    assert relative_interior_point(A1) == (2, 0)
    c = Cone.from_generators([(1, 0), (1, 1), (0, 1)])
    assert contains(c, relative_interior_point(c)) == Position.RELATIVE_INTERIOR


def test_is_smooth_examples():
    assert is_smooth(Cone.orthant(2))
    assert not is_smooth(A1)
    assert is_smooth(cone((1, 0), (1, 1)))


def test_common_refinement_examples():
    f = Fan.from_cones([cone((1, 0), (1, 1)), cone((1, 1), (0, 1))])
    assert common_refinement(f, f) == f
    halves = Fan.from_cones([cone((0, 1), (1, 0)), cone((1, 0), (2, -1))])
    assert common_refinement(halves, Fan.from_cones([A1])) == halves
    f1 = Fan.from_cones([cone((1, 0), (1, 1)), cone((1, 1), (0, 1))])
    f2 = Fan.from_cones([cone((1, 0), (1, 2)), cone((1, 2), (0, 1))])
    r = common_refinement(f1, f2)
    assert len(r.maximal) == 3
    assert check_fan(r, Cone.orthant(2)) == []


def test_regularize_examples():
    smooth = Fan.from_cones([cone((1, 0), (1, 1)), cone((1, 1), (0, 1))])
    assert regularize(smooth) == smooth
    r = regularize(Fan.from_cones([A1]))
    assert set(r.maximal) == {cone((0, 1), (1, 0)), cone((1, 0), (2, -1))}
    r = regularize(Fan.from_cones([cone((1, 0), (1, 2))]))
    assert set(r.maximal) == {cone((1, 0), (1, 1)), cone((1, 1), (1, 2))}


def test_check_fan_detects_overlap():
    bad = Fan(2, (cone((1, 0), (1, 2)), cone((1, 1), (0, 1))))
    assert check_fan(bad)


# ---------------------------------------------------------------- properties


@settings(max_examples=100, deadline=None)
@given(st.one_of(cones_2d(), cones_3d()))
def test_dual_involution(c):
    assert dual_cone(dual_cone(c)) == c


@settings(max_examples=60, deadline=None)
@given(cones_2d(4))
def test_hilbert_matches_box_search(c):
    H = hilbert_basis(c)
    bound = max(abs(x) for h in H for x in h) + 1
    assert sorted(H) == hilbert_basis_oracle(c.rays, bound=max(bound, 6))


@settings(max_examples=25, deadline=None)
@given(cones_3d(2), st.randoms())
def test_hilbert_generates_and_is_minimal(c, rnd):
    H = hilbert_basis(c)
    interior = relative_interior_point(dual_cone(c))
    height = lambda p: sum(a * b for a, b in zip(interior, p))  # noqa: E731
    assert all(height(h) > 0 for h in H)
    pts = list(lattice_points(c, 3))
    for p in rnd.sample(pts, min(100, len(pts))):
        assert representable(H, c, p, height)
    # irreducible: no h is a sum of two nonzero semigroup elements
    box = max(abs(x) for h in H for x in h)
    semigroup = list(lattice_points(c, box))
    for h in H:
        for g in semigroup:
            if g != h:
                assert contains(c, tuple(x - y for x, y in zip(h, g))) == Position.OUTSIDE


def _refines(fine: Fan, coarse: Fan) -> bool:
    return all(any(c.is_subset_of(d) for d in coarse.maximal) for c in fine.cones)


@settings(max_examples=40, deadline=None)
@given(cones_2d(7))
def test_regularize_2d(c):
    f = Fan.from_cones([c])
    r = regularize(f)
    assert all(cone_index(m.rays) == 1 for m in r.maximal)
    assert _refines(r, f)
    assert check_fan(r, c) == []


@settings(max_examples=15, deadline=None)
@given(cones_3d(2))
def test_regularize_3d(c):
    f = Fan.from_cones([c])
    r = regularize(f)
    assert all(len(m.rays) == 3 and abs(det(m.rays)) == 1 for m in r.maximal)
    assert _refines(r, f)
    assert check_fan(r, c) == []


@settings(max_examples=40, deadline=None)
@given(cones_2d(5), st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=3))
def test_common_refinement_is_fan(c, cuts):
    # split c along random lines through the origin
    f1 = Fan.from_cones([c])
    fans = [f1]
    for n in cuts:
        assume(any(n))
        parts = []
        for half in (n, tuple(-x for x in n)):
            p = dd_intersect(c, [half])
            if p.dim == 2:
                parts.append(p)
        fans.append(Fan.from_cones(parts))
    r = fans[0]
    for g in fans[1:]:
        r = common_refinement(r, g)
    assert check_fan(r, c) == []
    for g in fans:
        assert _refines(r, g)
