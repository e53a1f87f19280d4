"""Newton non-degeneracy certificates and toric embedded resolutions.

Non-degeneracy is checked on one relative-interior weight per cone of the
restricted Groebner fan (initial ideals are constant there), using the
Jacobian criterion on the torus.  Resolutions take a smooth refinement of
that fan and describe each maximal cone as a monomial chart.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .cones import Cone, Fan, Position, check_fan, contains, is_smooth, regularize
from .lattice import dot, rank
from .polynomials import (
    FieldSpec,
    Ideal,
    Polynomial,
    coordinate_product,
    jacobian,
    krull_dimension,
    minors,
    saturate,
    saturate_torus,
)
from .gfan import GroebnerFanRestricted, restricted_groebner_fan
from .toric import ToricIdealSpec, ToricPolynomial, nu


class PreconditionError(ValueError):
    """The input violates a standing assumption (reported, not a verdict)."""


class NNDFailure(RuntimeError):
    """Raised by :func:`resolve` when the ideal is Newton degenerate."""

    def __init__(self, report: "NNDReport"):
        self.report = report
        super().__init__(f"ideal is Newton degenerate on cone {report.failing_cone}")


# ---------------------------------------------------------------- smoothness


def _jacobian_smooth(ideal: Ideal, extra: Sequence[int] = (), away_from: Optional[Sequence[int]] = None) -> bool:
    """Jacobian criterion for ``V(ideal + (z_k : k in extra))``.

    Checks that the expected-codimension minors of the generators of
    ``ideal`` together with the coordinate functions in ``extra`` generate
    the unit ideal after saturating by the coordinates in ``away_from``
    (all coordinates when None, none when empty).
    """
    field, s = ideal.field, ideal.nvars
    coords = [Polynomial.variable(field, s, k) for k in extra]
    total = Ideal(field, s, list(ideal.generators) + coords)
    if total.is_unit():
        return True
    c = s - krull_dimension(total)
    gens = list(ideal.groebner_basis()) + coords
    jac = jacobian(gens)
    gb = total.groebner_basis()
    from .polynomials import normal_form

    ms = set()
    for m in minors(jac, c, field, s):
        r = normal_form(m, gb)
        if r:
            ms.add(r)
    sing = Ideal(field, s, list(total.generators) + sorted(ms, key=lambda p: p.sorted_terms()))
    if away_from is None:
        sing = saturate_torus(sing)
    elif away_from:
        sing = saturate(sing, coordinate_product(field, s, away_from))
    return sing.is_unit()


def smooth_on_torus(ideal: Ideal) -> bool:
    """Whether ``Sing(V(ideal))`` misses the torus ``(K^*)^s``."""
    torus_part = saturate_torus(ideal)
    if torus_part.is_unit() or torus_part.is_zero():
        return True
    return _jacobian_smooth(torus_part)


# ---------------------------------------------------------------- non-degeneracy


@dataclass
class ConeWitness:
    cone: Cone
    representative: tuple
    initial_ideal: Ideal
    smooth: bool


@dataclass
class NNDReport:
    verdict: bool
    witnesses: list[ConeWitness]
    failing_cone: Optional[Cone] = None
    gfan: Optional[GroebnerFanRestricted] = field(default=None, repr=False)


def check_vanishes_at_orbit(spec: ToricIdealSpec) -> None:
    for g in spec.generators:
        if g.has_constant_term():
            raise PreconditionError(f"generator {g.to_string()} does not vanish at the closed orbit")


def is_nnd(spec: ToricIdealSpec, gfan: Optional[GroebnerFanRestricted] = None) -> NNDReport:
    """Certify Newton non-degeneracy over every cone of the restricted Groebner fan."""
    check_vanishes_at_orbit(spec)
    gfan = gfan or restricted_groebner_fan(spec)
    witnesses = []
    failing = None
    for c in gfan.fan.cones:
        v = gfan.representative(c)
        ideal = gfan.polynomial_payload(c)
        ok = smooth_on_torus(ideal)
        witnesses.append(ConeWitness(c, v, ideal, ok))
        if not ok and failing is None:
            failing = c
    return NNDReport(failing is None, witnesses, failing, gfan)


# ---------------------------------------------------------------- charts


@dataclass
class ResolutionChart:
    """The monomial chart of a smooth cone with rays ``u_1..u_n``.

    ``x^a`` pulls back to ``prod z_k^<u_k, a>``.
    """

    cone: Cone
    pullbacks: tuple[Polynomial, ...]
    exceptional_mults: tuple[tuple[int, ...], ...]
    residuals: tuple[Polynomial, ...]
    strict_transform: Ideal
    exceptional: tuple[int, ...]
    snc_verdict: Optional[bool] = None

    @property
    def rays(self):
        return self.cone.rays


def pull_back(rays: Sequence[Sequence[int]], f: ToricPolynomial) -> Polynomial:
    field = f.ring.field
    return Polynomial(field, len(rays), {tuple(dot(u, a) for u in rays): c for a, c in f.terms.items()})


def chart_transform(cone: Cone, spec: ToricIdealSpec) -> ResolutionChart:
    """Total and strict transforms of ``spec`` in the chart of a smooth cone."""
    if not (is_smooth(cone) and cone.is_full_dimensional):
        raise ValueError(f"{cone} is not a smooth full-dimensional cone")
    ring = spec.ring
    rays = cone.rays
    n = len(rays)
    pulls, mults, residuals = [], [], []
    for f in spec.generators:
        mult = tuple(nu(u, f) for u in rays)
        pb = pull_back(rays, f)
        residual = Polynomial(ring.field, n, {tuple(x - m for x, m in zip(e, mult)): c for e, c in pb.terms.items()})
        pulls.append(pb)
        mults.append(mult)
        residuals.append(residual)
    strict = saturate_torus(Ideal(ring.field, n, pulls)) if pulls else Ideal(ring.field, n)
    sigma_rays = set(ring.sigma.rays)
    exceptional = tuple(k for k, u in enumerate(rays) if u not in sigma_rays)
    return ResolutionChart(cone, tuple(pulls), tuple(mults), tuple(residuals), strict, exceptional)


def verify_snc(chart: ResolutionChart) -> bool:
    """Strict transform smooth and transverse to every coordinate stratum of the chart.

    For each set ``E`` of chart coordinates, the locus where exactly those
    coordinates vanish is checked with the Jacobian of the strict transform
    generators together with ``z_k, k in E``.  The affine check on the strict
    transform alone is done as well.
    """
    S = chart.strict_transform
    n = S.nvars
    if S.is_unit():
        return True
    if not S.is_zero() and not _jacobian_smooth(S, away_from=()):
        return False
    for size in range(n + 1):
        for E in combinations(range(n), size):
            rest = [k for k in range(n) if k not in E]
            if S.is_zero() and not E:
                continue
            if not _jacobian_smooth(S, extra=E, away_from=rest):
                return False
    return True


# ---------------------------------------------------------------- resolution


@dataclass
class ResolutionOutput:
    fan: Fan
    charts: list[ResolutionChart]
    compatibility: dict
    gfan: GroebnerFanRestricted
    report: Optional[NNDReport] = None


def minimal_containing_cone(fan: Fan, c: Cone) -> Optional[Cone]:
    v = tuple(sum(col) for col in zip(*c.rays)) if c.rays else (0,) * c.ambient
    try:
        d = fan.containing_cone(v)
    except ValueError:
        return None
    return d if c.is_subset_of(d) else None


def resolve(spec: ToricIdealSpec, override_nnd: bool = False) -> ResolutionOutput:
    """Smooth refinement of the restricted Groebner fan, with one chart per maximal cone."""
    check_vanishes_at_orbit(spec)
    gfan = restricted_groebner_fan(spec)
    report = None
    if not override_nnd:
        report = is_nnd(spec, gfan)
        if not report.verdict:
            raise NNDFailure(report)
    sigma_fan = regularize(gfan.fan)
    problems = check_fan(sigma_fan, spec.ring.sigma)
    if problems:
        raise RuntimeError("regular subdivision is not a fan: " + "; ".join(problems))
    compatibility = {}
    for c in sigma_fan.cones:
        d = minimal_containing_cone(gfan.fan, c)
        if d is None:
            raise RuntimeError(f"{c} is not inside a single Groebner cone")
        compatibility[c] = d
    charts = []
    for c in sigma_fan.maximal:
        chart = chart_transform(c, spec)
        chart.snc_verdict = verify_snc(chart)
        charts.append(chart)
    return ResolutionOutput(sigma_fan, charts, compatibility, gfan, report)
