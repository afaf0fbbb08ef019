"""Command-line interface.

Every verb prints one machine-readable report (JSON by default, CSV with
--format csv).  Exit codes: 0 success, 1 verification mismatch, 2 bad
arguments or input, 3 search budget exceeded.  Output is deterministic
for a fixed configuration and seed, and independent of --workers (the
sweeps are sequential; the flag is accepted for interface stability).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from typing import List, Optional

from . import deepholes, enumeration, orbits
from .codes import CodeError, EvaluationSet, code_make, syndrome
from .deepholes import DEFAULT_BUDGET
from .field import GF, BudgetExceeded, FieldError, field
from .fixtures import FixtureError, load_fixture, point_to_json
from .projective import INF, line_points
from .orbits import OrbitError

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_BADARGS = 2
EXIT_BUDGET = 3


class Mismatch(Exception):
    def __init__(self, report):
        super().__init__("verification mismatch")
        self.report = report


def _field_args(sub):
    sub.add_argument("--p", type=int, default=None, help="characteristic")
    sub.add_argument("--h", type=int, default=1, help="extension degree")
    sub.add_argument("--modulus", type=str, default=None,
                     help="comma list of modulus coefficients, ascending")


def _common_args(sub, code_params=False):
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sub.add_argument("--workers", type=int, default=1)
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--seed", type=int, default=0)
    if code_params:
        sub.add_argument("--k", type=int)
        sub.add_argument("--n", type=int)
        sub.add_argument("--eval", type=str, default=None,
                         help="comma list of points; \"inf\" allowed last")
        sub.add_argument("--full-line", action="store_true",
                         dest="full_line")


def _get_field(args) -> GF:
    if args.p is None:
        raise CodeError("--p is required")
    modulus = None
    if args.modulus:
        modulus = tuple(int(v) for v in args.modulus.split(","))
    return field(args.p, args.h, modulus)


def _parse_points(F: GF, text: str) -> tuple:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        out.append(INF if tok == "inf" else int(tok))
    return tuple(out)


def _eval_points(F: GF, args, k: Optional[int] = None) -> tuple:
    if getattr(args, "full_line", False):
        return tuple(line_points(F))
    if args.eval is not None:
        return _parse_points(F, args.eval)
    n = args.n
    if n is None and k is not None:
        n = F.q  # widest finite evaluation set
    if n is None or n > F.q:
        raise CodeError("give --eval, --n <= q, or --full-line")
    return tuple(range(n))


def _classes_json(classes) -> list:
    return [c.serialize() for c in sorted(classes, key=lambda c: c.syndrome)]


def _point_sets_json(points) -> list:
    return [list(map(int, p)) for p in sorted(points)]


# ---------------------------------------------------------------------------
# verbs


def cmd_field_info(args):
    F = _get_field(args)
    return {"p": F.p, "h": F.h, "q": F.q, "modulus": list(F.modulus)}


def cmd_code_build(args):
    F = _get_field(args)
    code = code_make(F, args.k, _eval_points(F, args, args.k))
    return {"n": code.n, "k": code.k,
            "eval": [point_to_json(x) for x in code.eval_set.points],
            "G": [list(r) for r in code.G],
            "H": [list(r) for r in code.H]}


def cmd_code_mds_check(args):
    from . import linalg
    if args.fixture:
        F, code, matrix = load_fixture(args.fixture)
        M = matrix if matrix is not None else code.G
    else:
        F = _get_field(args)
        M = code_make(F, args.k, _eval_points(F, args, args.k)).G
    ok = linalg.is_mds(F, M)
    report = {"mds": ok, "rows": len(M), "cols": len(M[0])}
    if not ok:
        report["zero_minor"] = list(linalg.first_zero_minor(F, M))
    return report


def cmd_radius(args):
    F = _get_field(args)
    code = code_make(F, args.k, _eval_points(F, args, args.k))
    rho = deepholes.covering_radius(code, budget=args.budget)
    return {"n": code.n, "k": code.k, "radius": rho}


def cmd_deephole_enumerate(args):
    F = _get_field(args)
    code = code_make(F, args.k, _eval_points(F, args, args.k))
    found = deepholes.enumerate_deep_holes(code, budget=args.budget)
    return {"method": "bruteforce", "radius": found.rho,
            "count": len(found.classes),
            "classes": _classes_json(found.classes)}


def cmd_deephole_predict(args):
    F = _get_field(args)
    code = code_make(F, args.k, _eval_points(F, args, args.k))
    pred = deepholes.predicted_deep_holes(code)
    return {"method": "theorem", "radius": pred.rho,
            "count": len(pred.classes),
            "classes": _classes_json(pred.classes)}


def cmd_deephole_verify(args):
    F = _get_field(args)
    code = code_make(F, args.k, _eval_points(F, args, args.k))
    found = deepholes.enumerate_deep_holes(code, budget=args.budget)
    pred = deepholes.predicted_deep_holes(code, rho=found.rho)
    report = {"bruteforce": {"count": len(found.classes),
                             "classes": _classes_json(found.classes)},
              "theorem": {"count": len(pred.classes),
                          "classes": _classes_json(pred.classes)},
              "match": found.points() == pred.points()}
    if not report["match"]:
        raise Mismatch(report)
    return report


def cmd_deephole_classify_poly(args):
    F = _get_field(args)
    code = code_make(F, args.k, _eval_points(F, args, args.k))
    u = tuple(int(v) for v in args.word.split(","))
    if len(u) != code.n:
        raise CodeError(f"word length {len(u)} != n = {code.n}")
    form = deepholes.classify_generating_polynomial(code, u)
    return {"form": form.form,
            "delta": point_to_json(form.delta) if form.form != "nucleus"
            else None,
            "canonical": list(form.canonical),
            "syndrome": list(syndrome(code, u))}


def cmd_extend_roth_seroussi(args):
    F = _get_field(args)
    ell = args.k
    points = _eval_points(F, args)
    ext = deepholes.roth_seroussi_extensions(F, ell, points,
                                             budget=args.budget)
    report = {"ell": ell, "n": len(points),
              "bruteforce": {"count": len(ext.brute),
                             "points": _point_sets_json(ext.brute)}}
    if ext.predicted is not None:
        report["theorem"] = {"count": len(ext.predicted),
                             "points": _point_sets_json(ext.predicted)}
        report["match"] = ext.brute == ext.predicted
        if not report["match"]:
            raise Mismatch(report)
    return report


def cmd_rnc_complete(args):
    F = _get_field(args)
    m = args.n
    if m is None:
        raise CodeError("give the ambient dimension with --n")
    complete = deepholes.rnc_completeness(F, m, budget=args.budget)
    return {"m": m, "complete": complete}


def cmd_orbits_decompose(args):
    F = _get_field(args)
    dec = orbits.orbit_decomposition(F)
    return {"orbit_sizes": {label: len(pts) for label, pts in
                            sorted(dec.items())},
            "classes": {label: _point_sets_json(pts)
                        for label, pts in sorted(dec.items())}}


def cmd_orbits_stabilizer(args):
    F = _get_field(args)
    label = args.family
    group = orbits.stabilizer(F, label)
    return {"label": label, "order": len(group),
            "elements": [list(g.key()) for g in group]}


def cmd_red3_classify(args):
    F = _get_field(args)
    code = code_make(F, args.k, _eval_points(F, args, args.k))
    pts = orbits.red3_classify(code)
    return {"method": "theorem", "count": len(pts),
            "classes": _point_sets_json(pts)}


def cmd_red3_verify(args):
    F = _get_field(args)
    if args.eval is None and not args.full_line and args.n is None:
        rng = random.Random(args.seed)
        points = tuple(sorted(rng.sample(range(F.q), args.k + 3)))
    else:
        points = _eval_points(F, args, args.k)
    code = code_make(F, args.k, points)
    brute = deepholes.enumerate_deep_holes(code, budget=args.budget).points()
    theo = orbits.red3_classify(code)
    report = {"seed": args.seed,
              "eval": [point_to_json(x) for x in points],
              "bruteforce": {"count": len(brute),
                             "classes": _point_sets_json(brute)},
              "theorem": {"count": len(theo),
                          "classes": _point_sets_json(theo)},
              "match": brute == theo}
    if not report["match"]:
        raise Mismatch(report)
    return report


def cmd_arcs_canonical(args):
    F, code, matrix = load_fixture(args.fixture)
    if matrix is None and code is not None:
        matrix = code.G
    if matrix is None or len(matrix) != 3:
        raise FixtureError("canonical forms need a 3-row fixture matrix "
                           "[G | v] with the extender as last column")
    G = tuple(row[:-1] for row in matrix)
    v = tuple(row[-1] for row in matrix)
    cf = orbits.canonical_form(F, G, v)
    return {"family": cf.family,
            "points": [point_to_json(y) for y in cf.points],
            "matrix": [list(r) for r in cf.matrix],
            "P": [list(r) for r in cf.P],
            "Q": list(cf.Q)}


def cmd_arcs_count(args):
    F = _get_field(args)
    n = args.n
    fam = args.family
    closed = orbits.count_family(F, n, fam)
    pairs = orbits.count_arc_pairs(F, n, fam)
    report = {"family": fam, "n": n,
              "counts": {"closed_form": closed, "arc_pairs": pairs,
                         "stabilizer_order": orbits.stabilizer_order(F, fam)}}
    if args.enumerate:
        report["counts"]["enumerated"] = orbits.enumerate_family(F, n, fam)
        report["counts"]["enumerated_arc_pairs"] = \
            orbits.enumerate_arc_pairs(F, n, fam)
        if (report["counts"]["enumerated"] != closed
                or report["counts"]["enumerated_arc_pairs"] != pairs):
            raise Mismatch(report)
    return report


def cmd_hyperoval_classes(args):
    F = _get_field(args)
    result = deepholes.gdrs_deep_holes(F, 2, budget=args.budget)
    pinned = deepholes.enumerate_ordered_hyperoval_classes(F)
    report = {"count": len(result.classes),
              "classes": _classes_json(result.classes),
              "matrices": [[list(r) for r in M]
                           for M in result.hyperoval_matrices],
              "pinned_enumeration_count": len(pinned),
              "match": len(pinned) == len(result.classes)}
    if not report["match"]:
        raise Mismatch(report)
    return report


def cmd_conjecture_check(args):
    F = _get_field(args)
    res = deepholes.conjecture1_check(F, args.k, budget=args.budget)
    report = {"k": args.k, "holds": res.holds}
    if res.witness is not None:
        report["witness"] = res.witness.serialize()
    return report


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="rsdeep")
    subs = top.add_subparsers(dest="group", required=True)

    def add(group_name, verb, fn, code_params=True, extra=None):
        if group_name not in add.groups:
            g = subs.add_parser(group_name)
            add.groups[group_name] = g.add_subparsers(dest="verb",
                                                      required=True)
        sub = add.groups[group_name].add_parser(verb)
        _field_args(sub)
        _common_args(sub, code_params=code_params)
        for fn_extra in (extra or []):
            fn_extra(sub)
        sub.set_defaults(func=fn)
        return sub
    add.groups = {}

    add("field", "info", cmd_field_info, code_params=False)
    add("code", "build", cmd_code_build)
    add("code", "mds-check", cmd_code_mds_check,
        extra=[lambda s: s.add_argument("--fixture", default=None)])
    add("deephole", "enumerate", cmd_deephole_enumerate)
    add("deephole", "predict", cmd_deephole_predict)
    add("deephole", "verify", cmd_deephole_verify)
    add("deephole", "classify-poly", cmd_deephole_classify_poly,
        extra=[lambda s: s.add_argument("--word", required=True)])

    rad = subs.add_parser("radius")
    _field_args(rad)
    _common_args(rad, code_params=True)
    rad.set_defaults(func=cmd_radius)

    add("extend", "roth-seroussi", cmd_extend_roth_seroussi)
    add("rnc", "complete", cmd_rnc_complete)
    add("orbits", "decompose", cmd_orbits_decompose, code_params=False)
    add("orbits", "stabilizer", cmd_orbits_stabilizer, code_params=False,
        extra=[lambda s: s.add_argument("--family", required=True)])
    add("red3", "classify", cmd_red3_classify)
    add("red3", "verify", cmd_red3_verify)

    arc_canon = add("arcs", "canonical", cmd_arcs_canonical,
                    code_params=False,
                    extra=[lambda s: s.add_argument("--fixture",
                                                    required=True)])
    del arc_canon
    add("arcs", "count", cmd_arcs_count, code_params=False, extra=[
        lambda s: s.add_argument("--family", required=True,
                                 choices=("M1", "M2", "M3")),
        lambda s: s.add_argument("--n", type=int, required=True),
        lambda s: s.add_argument("--enumerate", action="store_true"),
        lambda s: s.add_argument("--force", action="store_true")])
    add("hyperoval", "classes", cmd_hyperoval_classes, code_params=False)
    add("conjecture", "check", cmd_conjecture_check,
        extra=[lambda s: s.add_argument("--force", action="store_true")])
    return top


def _emit_csv(report: dict, out) -> None:
    w = csv.writer(out)
    if "classes" in report and isinstance(report["classes"], list):
        w.writerow(["syndrome", "witness", "delta"])
        for c in report["classes"]:
            if isinstance(c, dict):
                wit = c.get("witness", {})
                w.writerow([" ".join(map(str, c["syndrome"])),
                            wit.get("type", ""), wit.get("delta", "")])
            else:
                w.writerow([" ".join(map(str, c)), "", ""])
    else:
        w.writerow(["key", "value"])
        for key in sorted(report):
            w.writerow([key, json.dumps(report[key], sort_keys=True)])


def _emit(report: dict, fmt: str, out) -> None:
    if fmt == "csv":
        _emit_csv(report, out)
    else:
        json.dump(report, out, sort_keys=True, indent=1)
        out.write("\n")


def run(argv: List[str], out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_BADARGS if e.code else EXIT_OK
    fmt = getattr(args, "format", "json")
    try:
        report = args.func(args)
    except Mismatch as e:
        _emit(e.report, fmt, out)
        return EXIT_MISMATCH
    except BudgetExceeded as e:
        _emit({"error": "budget exceeded", "detail": str(e)}, fmt, out)
        return EXIT_BUDGET
    except (CodeError, FixtureError, OrbitError, FieldError, ValueError) as e:
        _emit({"error": str(e)}, fmt, out)
        return EXIT_BADARGS
    _emit(report, fmt, out)
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
