"""Command-line front end: ``tategb <command> problem.json``."""
from __future__ import annotations

import argparse
import sys

from .arith import format_value, parse_rational
from .fan import cone_of, groebner_fan, tropical_variety
from .gb import local_gb
from .io import ParseError, dumps, load_problem, poly_out, polys_out, term_out, vec_out
from .order import TIE_BREAKS
from .polyhedral import PolyhedralDomain, mora_wnf, terms_p_principal
from .uagb import test_uagb, uagb_run
from .poly import homogenize

COMMANDS = ("gb", "uagb", "test-uagb", "fan", "tropical", "wnf", "terms-p")
DEFAULT_CAP = 50


class DomainError(ValueError):
    pass


def _need(prob, name):
    v = getattr(prob, name)
    if v is None:
        raise DomainError(f"this command needs the field {name!r}")
    return v


def _homogeneous(prob):
    if not all(f.is_homogeneous() for f in prob.generators):
        raise DomainError("fan and tropical need homogeneous generators")
    if not any(not f.is_zero() for f in prob.generators):
        raise DomainError("no nonzero generators")
    return [f for f in prob.generators if not f.is_zero()]


def cone_doc(cone, certs: bool) -> dict:
    d = {
        "dim": cone.dim,
        "equalities": sorted(vec_out(v) for v in cone.equalities),
        "inequalities": sorted(vec_out(v) for v in cone.inequalities),
        "relative_interior_point": vec_out(cone.sample),
        "initial_forms": polys_out(cone.initial_forms),
    }
    if cone.monomial_free is not None:
        d["monomial_free"] = cone.monomial_free
    if certs:
        d["basis"] = polys_out(cone.basis)
    return d


def _sort_cones(docs):
    return sorted(docs, key=lambda d: (-d["dim"], d["initial_forms"]))


def run(command: str, prob, cap=None, tie=None, jobs: int = 1, certs: bool = False) -> dict:
    tie = tie or prob.tie_break
    out = {"command": command, "prime": prob.ring.field.p, "variables": list(prob.ring.variables),
           "tie_break": tie}
    gens = [f for f in prob.generators if not f.is_zero()]
    if command == "gb":
        r = _need(prob, "log_radii")
        if not gens:
            raise DomainError("no nonzero generators")
        G = local_gb(gens, r, tie)
        out["log_radii"] = vec_out(r)
        out["basis"] = polys_out(G.generators)
        if certs:
            out["leading_terms"] = sorted(term_out(t, prob.ring) for t in G.leading_terms())
    elif command == "uagb":
        if not gens:
            raise DomainError("no nonzero generators")
        res = uagb_run(gens, None, tie, jobs)
        out["basis"] = polys_out(res.basis)
        out["iterations"] = res.iterations
        if certs:
            out["witnesses"] = [vec_out(w) for w in res.witnesses]
            out["homogeneous_basis"] = polys_out(res.homogeneous_basis)
    elif command == "test-uagb":
        if not gens:
            raise DomainError("no nonzero generators")
        hom = not all(f.is_homogeneous() for f in gens)
        F = [homogenize(f) for f in gens] if hom else gens
        rep = test_uagb(F, None, tie, hom, jobs)
        out["homogenized"] = hom
        if hom:
            out["homogenized_generators"] = polys_out(F)
        out["verdict"] = rep.verdict
        out["witness"] = vec_out(rep.witness) if rep.witness is not None else None
        out["vertex_count"] = rep.vertex_count
        if certs:
            out["vertices"] = [
                {"vertex": vec_out(v), "log_radii": vec_out(r), "passed": ok}
                for v, r, ok in rep.directions
            ]
    elif command == "fan":
        F = _homogeneous(prob)
        cones = groebner_fan(F, tie)
        out["maximal_cones"] = _sort_cones(cone_doc(c, certs) for c in cones)
        out["cone_count"] = len(cones)
        if prob.weight is not None:
            out["weight"] = vec_out(prob.weight)
            out["cone_at_weight"] = cone_doc(cone_of(F, prob.weight, tie), certs)
    elif command == "tropical":
        F = _homogeneous(prob)
        trop = tropical_variety(F, tie, jobs=jobs)
        out["cones"] = _sort_cones(cone_doc(c, certs) for c in trop.cones)
        out["cone_count"] = len(trop.cones)
        if certs:
            out["fan_cone_count"] = len(trop.all_cones)
    elif command == "wnf":
        P = PolyhedralDomain(_need(prob, "polyhedron_vertices"))
        r = _need(prob, "log_radii")
        if cap is None:
            cap = prob.cap if prob.cap is not None else DEFAULT_CAP
        if prob.f is not None:
            f, G = prob.f, list(prob.generators)
        elif prob.generators:
            f, G = prob.generators[0], list(prob.generators[1:])
        else:
            raise DomainError("wnf needs f or at least one generator")
        res = mora_wnf(f, G, P, r, cap, tie)
        out.update({
            "f": poly_out(f), "reducers": [poly_out(g) for g in G], "log_radii": vec_out(r),
            "polyhedron_vertices": [vec_out(s) for s in P.vertices], "cap": format_value(res.cap),
            "status": res.status, "remainder": poly_out(res.remainder), "steps": res.steps,
        })
        if certs:
            out["mu"] = poly_out(res.mu)
            out["cofactors"] = [poly_out(u) for u in res.cofactors]
    elif command == "terms-p":
        P = PolyhedralDomain(_need(prob, "polyhedron_vertices"))
        out["polyhedron_vertices"] = [vec_out(s) for s in P.vertices]
        out["terms"] = [
            {"f": poly_out(f), "terms": sorted(term_out(t, prob.ring) for t in terms_p_principal(f, P))}
            for f in gens
        ]
    else:
        raise DomainError(f"unknown command {command!r}")
    return out


def _parser():
    ap = argparse.ArgumentParser(prog="tategb", description=__doc__)
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("file", help="problem file (JSON), or - for stdin")
    ap.add_argument("--cap", type=str, default=None, help="valuation cap for wnf")
    ap.add_argument("--tie-break", choices=sorted(TIE_BREAKS), default=None)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--emit-certificates", action="store_true")
    return ap


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        text = sys.stdin.read() if args.file == "-" else open(args.file, encoding="utf-8").read()
    except OSError as e:
        print(f"tategb: {e}", file=sys.stderr)
        return 2
    try:
        prob = load_problem(text)
        cap = None
        if args.cap is not None:
            try:
                cap = parse_rational(args.cap)
            except ValueError as e:
                raise ParseError(f"--cap: {e}") from None
    except ParseError as e:
        print(f"tategb: parse error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"tategb: {e}", file=sys.stderr)
        return 1
    try:
        doc = run(args.command, prob, cap, args.tie_break, max(1, args.jobs), args.emit_certificates)
    except (ValueError, RuntimeError) as e:
        print(f"tategb: {e}", file=sys.stderr)
        return 1
    sys.stdout.write(dumps(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
