"""Command-line surface: reports, exit codes, and I/O formats.

Exit codes: 0 success / all claims pass; 1 verification failure (with a
diff in the report); 2 usage or input error; 3 resource bound exceeded.
Identical inputs and flags produce byte-identical JSON reports; timing is
only emitted under --timing so that the determinism contract holds.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import catalog
from .commalg import StabilizationError, hilbert_data, format_cpoly
from .dual import (quadratic_dual, frobenius_check, koszul_complex_check,
                   koszul_matrices, koszul_numerical_identity)
from .freealg import (PresentationError, parse_presentation, print_presentation,
                      format_poly, parse_poly)
from .geometry import (line_scheme_ideal, point_scheme_ideal, relation_matrix,
                       component_intersections, line_from_pluecker,
                       lines_through_point, point_on_line, tau_orbits)
from .grading import (check_homogeneous, identity_component_report,
                      relation_grades, search_dual_reflection)
from .groups import (build_group, poincare_polynomial, cyclotomic_factorization,
                     m16, sd16, m16_craw, dihedral)
from .ncgb import (BoundExceeded, complete, central_elements, hilbert_function,
                   groebner_polys, regular_sequence_check)
from .scalars import format_scalar


class UsageError(ValueError):
    pass


def _plain(x):
    if isinstance(x, (list, tuple, set)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def load_input(spec, fixtures=None):
    """Resolve an input argument to (key_or_path, Presentation, NamedAlgebra?)."""
    if spec.startswith("builtin:"):
        key = spec.split(":", 1)[1]
        alg = catalog.load_builtin(key)
        return key, alg.presentation, alg
    path = spec
    if not os.path.exists(path) and fixtures:
        for cand in (os.path.join(fixtures, spec),
                     os.path.join(fixtures, spec + ".alg")):
            if os.path.exists(cand):
                path = cand
                break
    if not os.path.exists(path):
        raise UsageError(f"input {spec!r} not found")
    with open(path, "r", encoding="utf-8") as fh:
        return path, parse_presentation(fh.read()), None


def emit(report, args, exit_code):
    if getattr(args, "timing", False):
        report["elapsed_ms"] = int(1000 * (time.time() - args._t0))
    if args.format == "json":
        print(json.dumps(_plain(report), sort_keys=True, indent=2))
    else:
        _emit_text(report)
    return exit_code


def _emit_text(report, indent=0):
    pad = "  " * indent
    for key in report:
        val = report[key]
        if isinstance(val, dict):
            print(f"{pad}{key}:")
            _emit_text(val, indent + 1)
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            print(f"{pad}{key}:")
            for item in val:
                _emit_text(item, indent + 1)
                print()
        else:
            print(f"{pad}{key}: {_plain(val)}")


def _base_report(args, command, inputs):
    return {"command": command, "inputs": inputs,
            "flags": {k: v for k, v in vars(args).items()
                      if not k.startswith("_") and k not in ("func",)
                      and v is not None}}


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_parse(args):
    name, pres, _ = load_input(args.input, args.fixtures)
    rep = _base_report(args, "parse", [name])
    rep["generators"] = list(pres.gens)
    rep["degrees"] = list(pres.degrees)
    rep["relations"] = [format_poly(r, pres.gens, pres.order)
                        for r in pres.relations]
    rep["canonical"] = print_presentation(pres)
    rep["verdict"] = "ok"
    return emit(rep, args, 0)


def cmd_gb(args):
    name, pres, _ = load_input(args.input, args.fixtures)
    gb = complete(pres, args.depth)
    rep = _base_report(args, "gb", [name])
    rep["complete_through"] = gb.complete_through
    rep["basis"] = [format_poly(p, pres.gens, pres.order)
                    for p in groebner_polys(gb)]
    rep["verdict"] = "ok"
    return emit(rep, args, 0)


def cmd_hilbert(args):
    name, pres, _ = load_input(args.input, args.fixtures)
    gb = complete(pres, args.depth)
    rep = _base_report(args, "hilbert", [name])
    rep["hilbert_function"] = hilbert_function(gb, args.depth)
    rep["verdict"] = "ok"
    if args.figures:
        from .figures import hilbert_bar_chart
        os.makedirs(args.figures, exist_ok=True)
        rep["figures"] = [hilbert_bar_chart(
            rep["hilbert_function"], f"Hilbert function of {name}",
            os.path.join(args.figures, "hilbert.png"))]
    return emit(rep, args, 0)


def cmd_center(args):
    name, pres, _ = load_input(args.input, args.fixtures)
    gb = complete(pres, max(args.depth, args.degree + 2))
    basis = central_elements(gb, args.degree)
    rep = _base_report(args, "center", [name])
    rep["degree"] = args.degree
    rep["dimension"] = len(basis)
    rep["basis"] = [format_poly(p, pres.gens, pres.order) for p in basis]
    rep["verdict"] = "ok"
    return emit(rep, args, 0)


def cmd_normal2(args):
    from .normal2 import normal_elements_deg2
    name, pres, alg = load_input(args.input, args.fixtures)
    rep = _base_report(args, "normal2", [name])
    gb = complete(pres, max(args.depth, 6))
    if alg is not None and alg.key in ("S", "T"):
        bundle = catalog.geometry_bundle(alg.key)
        report = normal_elements_deg2(gb, bundle.points, bundle.tau)
    else:
        report = normal_elements_deg2(gb)
    rep["certified_empty"] = report.certified_empty
    rep["all_of_degree_two"] = report.all_of_degree_two
    rep["central_dimension"] = report.central_dimension
    rep["pieces"] = [{"mu": format_scalar(p.mu),
                      "basis": [format_poly(b, pres.gens, pres.order)
                                for b in p.basis]}
                     for p in report.pieces]
    rep["notes"] = report.notes
    rep["verdict"] = "ok"
    return emit(rep, args, 0)


def cmd_dual(args):
    name, pres, _ = load_input(args.input, args.fixtures)
    dual = quadratic_dual(pres)
    rep = _base_report(args, "dual", [name])
    rep["presentation"] = print_presentation(dual)
    rep["verdict"] = "ok"
    return emit(rep, args, 0)


def cmd_frobenius(args):
    name, pres, _ = load_input(args.input, args.fixtures)
    dual = quadratic_dual(pres, order_priority=(3, 1, 2, 0)
                          if pres.ngens == 4 else None)
    report = frobenius_check(dual, args.top, args.depth)
    rep = _base_report(args, "frobenius", [name])
    rep["hilbert"] = report.hilbert
    rep["nondegenerate"] = report.nondegenerate
    rep["failures"] = report.failures
    rep["splits"] = {str(k): {"rows": [format_poly({w: Fraction(1)}, dual.gens)
                                       for w in v["rows"]],
                              "matrix": [[format_scalar(x) for x in row]
                                         for row in v["matrix"]],
                              "full_rank": v["full_rank"]}
                     for k, v in report.splits.items()}
    rep["verdict"] = "pass" if report.nondegenerate else "fail"
    return emit(rep, args, 0 if report.nondegenerate else 1)


def cmd_koszulcheck(args):
    name, pres, alg = load_input(args.input, args.fixtures)
    if args.matrices:
        from .dual import matrix_from_json
        with open(args.matrices, "r", encoding="utf-8") as fh:
            mats = [matrix_from_json(obj, pres.gens, pres.field)
                    for obj in json.load(fh)]
        source = args.matrices
    elif alg is not None and "koszul_matrices" in alg.aux:
        mats = alg.aux["koszul_matrices"]
        source = "catalog"
    else:
        mats = koszul_matrices(pres)
        source = "derived"
    report = koszul_complex_check(pres, mats, args.depth)
    numeric = koszul_numerical_identity(pres, args.depth)
    rep = _base_report(args, "koszulcheck", [name])
    rep["matrices"] = source
    rep["is_complex"] = report.is_complex
    rep["euler_ok"] = report.euler_ok
    rep["numerical_identity"] = numeric
    rep["failures"] = report.failures
    ok = report.is_complex and report.euler_ok and not report.failures and numeric
    rep["verdict"] = "pass" if ok else "fail"
    return emit(rep, args, 0 if ok else 1)


def cmd_regseq(args):
    name, pres, alg = load_input(args.input, args.fixtures)
    if args.elements:
        elems = [parse_poly(src.strip(), pres.gens, pres.field)
                 for src in args.elements.split(";") if src.strip()]
        depth = args.depth
    elif alg is not None and "central_sequence" in alg.aux:
        elems, depth, _total = alg.aux["central_sequence"]
        depth = max(depth, args.depth)
    else:
        raise UsageError("no sequence given: pass --elements 'p1; p2; ...'")
    ok, hq = regular_sequence_check(pres, elems, depth)
    rep = _base_report(args, "regseq", [name])
    rep["sequence"] = [format_poly(e, pres.gens, pres.order) for e in elems]
    rep["regular"] = ok
    rep["quotient_hilbert"] = hq
    rep["quotient_total_dimension"] = sum(hq)
    rep["verdict"] = "pass" if ok else "fail"
    return emit(rep, args, 0 if ok else 1)


def cmd_pointscheme(args):
    name, pres, alg = load_input(args.input, args.fixtures)
    key = alg.key if alg is not None else None
    if key in ("S", "T"):
        bundle = catalog.geometry_bundle(key)
        ideal = bundle.point_ideal
    else:
        geo = alg.aux.get("geometry_presentation", pres) if alg else pres
        ideal = point_scheme_ideal(relation_matrix(geo))
    hf, dim, deg = hilbert_data(ideal, args.depth + 4)
    rep = _base_report(args, "pointscheme", [name])
    rep["minor_ideal_hilbert"] = hf
    rep["projective_dimension"] = dim
    rep["degree"] = deg
    if key in ("S", "T"):
        bundle = catalog.geometry_bundle(key)
        rep["points"] = {n: [format_scalar(x) for x in p]
                         for n, p in sorted(bundle.points.items())}
        rep["tau"] = dict(sorted(bundle.tau.items()))
        orbs = tau_orbits(list(bundle.points), bundle.tau)
        rep["tau_orbits"] = sorted(orbs, key=lambda o: (len(o), o))
        if args.figures:
            from .figures import render_geometry_figures
            rep["figures"] = render_geometry_figures(bundle, args.figures,
                                                     f"{key}_points")
    rep["verdict"] = "ok"
    return emit(rep, args, 0)


def cmd_linescheme(args):
    name, pres, alg = load_input(args.input, args.fixtures)
    key = alg.key if alg is not None else None
    if key in ("S", "T"):
        bundle = catalog.geometry_bundle(key)
        ideal = bundle.line_ideal
    else:
        geo = alg.aux.get("geometry_presentation", pres) if alg else pres
        ideal = line_scheme_ideal(geo)
    hf, dim, deg = hilbert_data(ideal, args.depth + 4)
    rep = _base_report(args, "linescheme", [name])
    rep["ideal_generators"] = len(ideal.gens)
    rep["hilbert"] = hf
    rep["projective_dimension"] = dim
    rep["degree"] = deg
    if key in ("S", "T"):
        bundle = catalog.geometry_bundle(key)
        rep["components"] = {
            c.label: {"forms": [format_cpoly(g, ideal.varnames)
                                for g in c.ideal.gens[:-1]],
                      "pluecker_curve": [format_cpoly(g, ("s", "t"))
                                         for g in c.parametrization]}
            for c in bundle.components}
    rep["verdict"] = "ok"
    return emit(rep, args, 0)


def cmd_incidence(args):
    name, pres, alg = load_input(args.input, args.fixtures)
    key = alg.key if alg is not None else None
    if key not in ("S", "T"):
        raise UsageError("incidence reports are available for builtin:S and "
                         "builtin:T")
    bundle = catalog.geometry_bundle(key)
    inter = component_intersections(bundle.components)
    rep = _base_report(args, "incidence", [name])
    table = {}
    for (ca, cb), plks in sorted(inter.items()):
        rowlines = []
        for plk in plks:
            line = line_from_pluecker(plk)
            names = sorted(n for n, p in bundle.points.items()
                           if point_on_line(p, line))
            rowlines.append("l(" + ",".join(names) + ")")
        table[f"{ca} & {cb}"] = sorted(rowlines)
    rep["component_intersections"] = table
    counts = {}
    all_lines = {}
    for pname, p in sorted(bundle.points.items()):
        found = lines_through_point(p, bundle.components)
        plks = {plk for (_, plk) in found if plk is not None}
        counts[pname] = len(plks)
        for plk in plks:
            all_lines.setdefault(plk, set()).add(pname)
    rep["lines_through_each_point"] = counts
    rep["distinct_incident_lines"] = len(all_lines)
    ok = all(v == 3 for v in counts.values()) and len(all_lines) == 30
    rep["verdict"] = "pass" if ok else "fail"
    if args.figures:
        from .figures import render_geometry_figures
        rep["figures"] = render_geometry_figures(bundle, args.figures,
                                                 f"{key}_incidence")
    return emit(rep, args, 0 if ok else 1)


def cmd_grading(args):
    name, pres, alg = load_input(args.input, args.fixtures)
    if alg is None or alg.group is None:
        raise UsageError("grading data is only stored for catalog algebras")
    ga = alg.grade_assignment()
    rep = _base_report(args, "grading", [name])
    rep["group"] = alg.group_name
    rep["grades"] = [alg.group.names[g] for g in alg.grades]
    rep["homogeneous"] = check_homogeneous(pres, ga)
    rep["relation_grades"] = [alg.group.names[g] if g is not None else None
                              for g in relation_grades(pres, ga)]
    rep["verdict"] = "pass" if rep["homogeneous"] else "fail"
    return emit(rep, args, 0 if rep["homogeneous"] else 1)


def cmd_identity_component(args):
    name, pres, alg = load_input(args.input, args.fixtures)
    if alg is None or alg.group is None:
        raise UsageError("identity-component reports need a graded catalog "
                         "algebra")
    ga = alg.grade_assignment()
    gb = complete(pres, args.depth)
    report = identity_component_report(gb, ga, args.depth)
    rep = _base_report(args, "identity-component", [name])
    rep["hilbert"] = report.hilbert
    rep["generators"] = report.generator_strings(pres.gens)
    rep["generator_degrees"] = report.generator_degrees
    rep["commutation"] = {f"{i},{j}": v
                          for (i, j), v in sorted(report.commutation.items())}
    rep["verdict"] = "ok"
    return emit(rep, args, 0)


def cmd_poincare(args):
    group = _group_by_name(args.group)
    gens = []
    for word in args.gens.split(","):
        word = word.strip()
        if word.isdigit():
            gens.append(int(word))
        else:
            gens.append(group.resolve_word(word, getattr(group, "letters", {})))
    p = poincare_polynomial(group, gens)
    fact = cyclotomic_factorization(p)
    rep = _base_report(args, "poincare", [args.group])
    rep["generating_set"] = [group.names[g] for g in gens]
    rep["poincare_polynomial"] = p
    rep["value_at_one"] = sum(p)
    rep["cyclotomic_factorization"] = (fact if fact != "NOT_CYCLOTOMIC"
                                       else "NOT_CYCLOTOMIC")
    rep["verdict"] = "ok"
    return emit(rep, args, 0)


def _group_by_name(name):
    table = {"M16": m16, "SD16": sd16, "modular_order16_craw": m16_craw,
             "D8": lambda: dihedral(8)}
    if name in table:
        return table[name]()
    if name.startswith("cyclic("):
        return build_group("cyclic", int(name[7:-1]))
    if name.startswith("dihedral("):
        return build_group("dihedral", int(name[9:-1]))
    raise UsageError(f"unknown group {name!r}")


def cmd_search_drg(args):
    group = _group_by_name(args.group)
    coeffs = {"one": [Fraction(1)], "pm1": [Fraction(1), Fraction(-1)]}
    if args.coeffs not in coeffs:
        raise UsageError("--coeffs must be 'one' or 'pm1'")
    report = search_dual_reflection(group, args.gens, args.depth,
                                    coeffs[args.coeffs],
                                    group_name=args.group,
                                    exhaustive=args.exhaustive)
    rep = _base_report(args, "search-drg", [args.group])
    rep.update(report.to_json(group))
    rep["verdict"] = "ok"
    return emit(rep, args, 0)


def cmd_verify_paper(args):
    keys = None
    if args.claims:
        keys = [k.strip() for k in args.claims.split(",") if k.strip()]
    results = catalog.verify_claims(keys=keys, depth=args.depth,
                                    seed=args.seed,
                                    include_search=not args.skip_search)
    rep = _base_report(args, "verify-paper", ["catalog"])
    rep["results"] = [r.to_json() for r in results]
    passed = sum(r.ok for r in results)
    bounded = sum(r.bound_exceeded for r in results)
    failed = len(results) - passed - bounded
    rep["passed"] = passed
    rep["bound_exceeded"] = bounded
    rep["total"] = len(results)
    rep["verdict"] = ("pass" if passed == len(results)
                      else "bound-exceeded" if failed == 0 else "fail")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write("claim,verdict,description\n")
            for r in results:
                desc = (r.description or "").replace('"', "'")
                fh.write(f"{r.claim},{r.verdict},\"{desc}\"\n")
    if args.figures:
        from .figures import claim_summary_chart
        os.makedirs(args.figures, exist_ok=True)
        rep["figures"] = [claim_summary_chart(
            results, os.path.join(args.figures, "claims.png"))]
    if passed == len(results):
        return emit(rep, args, 0)
    return emit(rep, args, 3 if failed == 0 else 1)


# ---------------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(
        prog="drgkit",
        description="Exact workbench for finitely presented graded algebras: "
                    "bounded noncommutative Groebner bases, group gradings, "
                    "quadratic duals, and point/line scheme geometry.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="file path or builtin:KEY "
                           f"(keys: {', '.join(catalog.BUILTIN_KEYS)})")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--depth", type=int, default=8)
        p.add_argument("--seed", type=int, default=20240917)
        p.add_argument("--fixtures", help="directory with extra presentation files")
        p.add_argument("--timing", action="store_true",
                       help="include elapsed_ms (breaks byte-determinism)")

    p = sub.add_parser("parse", help="parse and canonically reprint")
    common(p)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("gb", help="degree-bounded Groebner basis")
    common(p)
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("hilbert", help="Hilbert function through --depth")
    common(p)
    p.add_argument("--figures", help="directory for rendered figures")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("center", help="basis of the degree-d center")
    common(p)
    p.add_argument("--degree", type=int, default=2)
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("normal2", help="degree-two normal element report")
    common(p)
    p.set_defaults(func=cmd_normal2)

    p = sub.add_parser("dual", help="quadratic dual presentation")
    common(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("frobenius", help="dual pairing nondegeneracy report")
    common(p)
    p.add_argument("--top", type=int, default=4)
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("koszulcheck", help="complex and graded exactness check")
    common(p)
    p.add_argument("--matrices",
                   help="JSON file with a list of {rows, cols, entries} matrices")
    p.set_defaults(func=cmd_koszulcheck)

    p = sub.add_parser("regseq", help="regular-sequence Hilbert test")
    common(p)
    p.add_argument("--elements", help="semicolon-separated polynomials")
    p.set_defaults(func=cmd_regseq)

    p = sub.add_parser("pointscheme", help="point scheme minors and shifts")
    common(p)
    p.add_argument("--figures", help="directory for rendered figures")
    p.set_defaults(func=cmd_pointscheme)

    p = sub.add_parser("linescheme", help="line scheme quartics report")
    common(p)
    p.set_defaults(func=cmd_linescheme)

    p = sub.add_parser("incidence", help="points-on-lines incidence report")
    common(p)
    p.add_argument("--figures", help="directory for rendered figures")
    p.set_defaults(func=cmd_incidence)

    p = sub.add_parser("grading", help="group grading homogeneity report")
    common(p)
    p.set_defaults(func=cmd_grading)

    p = sub.add_parser("identity-component", help="identity component report")
    common(p)
    p.set_defaults(func=cmd_identity_component)

    p = sub.add_parser("poincare", help="length generating polynomial")
    common(p, needs_input=False)
    p.add_argument("--group", required=True)
    p.add_argument("--gens", required=True,
                   help="comma-separated element words or indices")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("search-drg", help="dual-reflection-group search")
    common(p, needs_input=False)
    p.add_argument("--group", required=True)
    p.add_argument("--gens", type=int, default=4)
    p.add_argument("--coeffs", default="one", help="'one' or 'pm1'")
    p.add_argument("--exhaustive", action="store_true",
                   help="skip conjugacy reduction of generating sets")
    p.set_defaults(func=cmd_search_drg)

    p = sub.add_parser("verify-paper",
                       help="run the built-in claims catalog end to end")
    common(p, needs_input=False)
    p.add_argument("--all", action="store_true", help="run every claim")
    p.add_argument("--claims", help="comma-separated claim-id substrings")
    p.add_argument("--skip-search", action="store_true",
                   help="skip the two exhaustive searches")
    p.add_argument("--csv", help="write the claim table as CSV")
    p.add_argument("--figures", help="directory for rendered figures")
    p.set_defaults(func=cmd_verify_paper)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    args._t0 = time.time()
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PresentationError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (BoundExceeded, StabilizationError, ResourceWarning) as exc:
        print(f"resource bound exceeded: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
