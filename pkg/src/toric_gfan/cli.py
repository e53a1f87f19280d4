"""Command-line front end.

Usage::

    toric-gfan <command> --input job.json [--output out.json] [--field Q|Fp:<p>]
               [--override-nnd] [--plot fan.svg]

Commands: dual, hilbert, toric-ideal, trop, gfan, nnd, resolve, plot.

A job document looks like::

    {"field": "Q",
     "sigma": [[0, 1], [2, -1]],
     "ideal": [[{"coeff": "1", "exponent": [1, 0]},
                {"coeff": "1", "exponent": [1, 2]}]]}

``trop`` additionally reads ``"weight"`` (a vector in the weight space of
the Hilbert-basis variables); ``plot`` and ``--plot`` read an optional
``"section"`` normal for rank-3 fans.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

from .cones import Cone, Fan, dual_cone
from .gfan import GroebnerFanRestricted, restricted_groebner_fan
from .nnd_resolve import NNDFailure, NNDReport, PreconditionError, is_nnd, resolve
from .plot import plot
from .polynomials import FieldSpec, Ideal, Polynomial
from .toric import ToricIdealSpec, ToricPolynomial, ToricRing, lift_ideal, trop_membership

COMMANDS = ("dual", "hilbert", "toric-ideal", "trop", "gfan", "nnd", "resolve", "plot")


class JobError(ValueError):
    """A malformed or inconsistent job document."""


@dataclass
class JobDocument:
    field: FieldSpec
    sigma: list[tuple[int, ...]]
    ideal: list[list[tuple[Fraction, tuple[int, ...]]]] = field(default_factory=list)
    options: dict = field(default_factory=dict)


# ---------------------------------------------------------------- parsing / serialization


def _coeff_str(c) -> str:
    return str(Fraction(c))


def parse_job(doc: Any) -> JobDocument:
    if not isinstance(doc, dict):
        raise JobError("job document must be a JSON object")
    try:
        fld = FieldSpec.parse(str(doc.get("field", "Q")))
    except ValueError as e:
        raise JobError(str(e)) from None
    if "sigma" not in doc:
        raise JobError("missing 'sigma'")
    try:
        sigma = [tuple(int(x) for x in r) for r in doc["sigma"]]
    except (TypeError, ValueError):
        raise JobError("'sigma' must be a list of integer vectors") from None
    if not sigma or len({len(r) for r in sigma}) != 1:
        raise JobError("'sigma' rays must be nonempty and of equal length")
    ideal = []
    for gi, gen in enumerate(doc.get("ideal", [])):
        terms = []
        if not isinstance(gen, list):
            raise JobError(f"ideal[{gi}] must be a list of terms")
        for ti, term in enumerate(gen):
            try:
                c = Fraction(str(term["coeff"]))
                e = tuple(int(x) for x in term["exponent"])
            except (KeyError, TypeError, ValueError, ZeroDivisionError):
                raise JobError(f"ideal[{gi}][{ti}] needs 'coeff' (string) and 'exponent' (integers)") from None
            if len(e) != len(sigma[0]):
                raise JobError(f"ideal[{gi}][{ti}] exponent has the wrong length")
            terms.append((c, e))
        ideal.append(terms)
    options = {k: v for k, v in doc.items() if k not in ("field", "sigma", "ideal")}
    return JobDocument(fld, sigma, ideal, options)


def dump_job(job: JobDocument) -> dict:
    """Canonical form of a job: sorted rays, merged and sorted terms."""
    ideal = []
    for gen in job.ideal:
        merged: dict = {}
        for c, e in gen:
            merged[e] = merged.get(e, 0) + c
        ideal.append([{"coeff": _coeff_str(c), "exponent": list(e)} for e, c in sorted(merged.items()) if c])
    doc = {"field": str(job.field), "sigma": [list(r) for r in sorted(set(job.sigma))], "ideal": ideal}
    doc.update(job.options)
    return doc


def build_ring(job: JobDocument) -> ToricRing:
    try:
        sigma = Cone.from_generators(job.sigma)
        return ToricRing(sigma, job.field)
    except ValueError as e:
        raise PreconditionError(str(e)) from None


def build_ideal(job: JobDocument, ring: ToricRing) -> ToricIdealSpec:
    try:
        gens = [ToricPolynomial(ring, {e: c for c, e in gen}) for gen in job.ideal]
    except ValueError as e:
        raise PreconditionError(str(e)) from None
    return ToricIdealSpec(ring, tuple(gens))


def toric_poly_doc(f: ToricPolynomial) -> dict:
    return {
        "terms": [{"coeff": _coeff_str(f.terms[a]), "exponent": list(a)} for a in f.support],
        "text": f.to_string(),
    }


def poly_doc(f: Polynomial, prefix: str = "y") -> dict:
    return {
        "terms": [{"coeff": _coeff_str(c), "exponent": list(e)} for e, c in f.sorted_terms()],
        "text": f.to_string(prefix),
    }


def ideal_doc(ideal: Ideal, prefix: str = "y") -> list:
    return [poly_doc(g, prefix) for g in ideal.groebner_basis()]


def fan_doc(fan: Fan) -> dict:
    return {
        "rays": [list(r) for r in fan.rays],
        "maximal_cones": [fan.ray_indices(c) for c in fan.maximal],
    }


def _cone_doc(fan: Fan, c: Cone) -> list:
    return fan.ray_indices(c)


# ---------------------------------------------------------------- commands


def _payload_keys(g: GroebnerFanRestricted) -> list[str]:
    return [json.dumps([toric_poly_doc(f)["text"] for f in p.generators]) for p in g.initial_ideals]


def gfan_doc(g: GroebnerFanRestricted) -> dict:
    out = fan_doc(g.fan)
    out["initial_ideals"] = [[toric_poly_doc(f) for f in p.generators] for p in g.initial_ideals]
    out["lifted_initial_ideals"] = [ideal_doc(m.initial_ideal()) for m in g.marked]
    return out


def nnd_doc(report: NNDReport) -> dict:
    fan = report.gfan.fan
    return {
        "verdict": report.verdict,
        "fan": fan_doc(fan),
        "witnesses": [
            {
                "cone": _cone_doc(fan, w.cone),
                "dim": w.cone.dim,
                "representative": list(w.representative),
                "initial_ideal": ideal_doc(w.initial_ideal),
                "smooth_on_torus": w.smooth,
            }
            for w in report.witnesses
        ],
        "failing_cone": None if report.failing_cone is None else _cone_doc(fan, report.failing_cone),
    }


def execute(command: str, job: JobDocument, override_nnd: bool = False) -> tuple[dict, Optional[str]]:
    """Run ``command`` on ``job``; returns the output document and an optional SVG."""
    if command not in COMMANDS:
        raise JobError(f"unknown command {command!r}")
    try:
        sigma = Cone.from_generators(job.sigma)
        if command == "dual":
            return {"sigma": [list(r) for r in sigma.rays], "dual": [list(r) for r in dual_cone(sigma).rays]}, None
    except ValueError as e:
        raise PreconditionError(str(e)) from None
    ring = build_ring(job)
    if command == "hilbert":
        return {"dual": [list(r) for r in ring.sigma_dual.rays], "hilbert": [list(a) for a in ring.hilbert]}, None
    if command == "toric-ideal":
        return {
            "hilbert": [list(a) for a in ring.hilbert],
            "mmatrix": [list(row) for row in ring.mmatrix],
            "toric_ideal": ideal_doc(ring.toric_ideal),
        }, None
    spec = build_ideal(job, ring)
    if command == "trop":
        if "weight" not in job.options:
            raise JobError("trop needs a 'weight'")
        w = tuple(int(x) for x in job.options["weight"])
        if len(w) != ring.s or any(x < 0 for x in w):
            raise PreconditionError(f"weight must be a nonnegative vector of length {ring.s}")
        ideal = lift_ideal(spec) if spec.generators else ring.toric_ideal
        return {
            "weight": list(w),
            "in_tropical_variety": trop_membership(ideal, w),
            "in_phi_sigma": ring.in_phi_sigma(w),
        }, None
    section = job.options.get("section")
    if command in ("gfan", "plot"):
        g = restricted_groebner_fan(spec)
        svg = plot(g.fan, _payload_keys(g), section)
        if command == "plot":
            return {"svg": svg}, svg
        return gfan_doc(g), svg
    if command == "nnd":
        report = is_nnd(spec)
        return nnd_doc(report), plot(report.gfan.fan, _payload_keys(report.gfan), section)
    # resolve
    res = resolve(spec, override_nnd=override_nnd)
    gfan = res.gfan
    charts = []
    for ch in res.charts:
        charts.append({
            "cone": res.fan.ray_indices(ch.cone),
            "rays": [list(u) for u in ch.rays],
            "groebner_cone": gfan.index_of(res.compatibility[ch.cone]),
            "pullbacks": [poly_doc(p, "z") for p in ch.pullbacks],
            "exceptional_multiplicities": [list(m) for m in ch.exceptional_mults],
            "exceptional_coordinates": list(ch.exceptional),
            "strict_transform": ideal_doc(ch.strict_transform, "z"),
            "snc": ch.snc_verdict,
        })
    doc = {
        "fan": fan_doc(res.fan),
        "groebner_fan": fan_doc(gfan.fan),
        "charts": charts,
        "nnd_checked": not override_nnd,
    }
    return doc, plot(res.fan, None, section)


def _dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="toric-gfan", description=__doc__.split("\n\n")[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", required=True, help="job document (JSON)")
    parser.add_argument("--output", help="write the result here instead of stdout")
    parser.add_argument("--field", help="override the field: Q or Fp:<p>")
    parser.add_argument("--override-nnd", action="store_true", help="resolve even if the NND check fails")
    parser.add_argument("--plot", help="also write an SVG drawing of the fan")
    args = parser.parse_args(argv)

    try:
        with open(args.input) as fh:
            text = fh.read()
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise JobError(f"{args.input}:{e.lineno}:{e.colno}: {e.msg}") from None
        if args.field:
            if not isinstance(raw, dict):
                raise JobError("job document must be a JSON object")
            raw["field"] = args.field
        job = parse_job(raw)
        doc, svg = execute(args.command, job, args.override_nnd)
    except NNDFailure as e:
        print(_dumps({"error": str(e), "report": nnd_doc(e.report)}), end="", file=sys.stderr)
        return 2
    except (JobError, PreconditionError, OSError) as e:
        print(f"toric-gfan: error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # noqa: BLE001 - reported as an internal error
        print(f"toric-gfan: internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1

    if args.command == "plot":
        target = args.plot or args.output
        if target:
            with open(target, "w") as fh:
                fh.write(svg)
        else:
            sys.stdout.write(svg)
        return 0
    text = _dumps(doc)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.plot and svg is not None:
        with open(args.plot, "w") as fh:
            fh.write(svg)
    return 0


if __name__ == "__main__":
    sys.exit(main())
