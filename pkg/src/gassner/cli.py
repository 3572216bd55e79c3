"""Command-line front end.

Exit codes: 0 pass, 1 property violated, 2 input error, 3 precondition error.
Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .braid import annotate, format_word, is_pure, parse_word
from .errors import BraidParseError, PreconditionError
from .invariant import gassner, parse_vw_word, verify_unitarity, verify_unitarity_vw
from .numeric import (HERMITIAN_TOL, UNITARITY_TOL, TorusPoint, check_psi_prime_unitarity,
                      check_psi_unitarity, hermitian_pivots, hermitian_residual,
                      is_positive_definite, psi_numeric, psi_prime_numeric)
from .selftest import run_sweep

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(report, fmt, pretty_lines):
    if fmt == "json":
        print(json.dumps(report, indent=2))
    else:
        for line in pretty_lines:
            print(line)


def _difference(rep):
    pos = rep.first_difference()
    if pos is None:
        return None
    i, j = pos
    return {"row": i + 1, "col": j + 1,
            "left": str(rep.left[i, j]), "right": str(rep.right[i, j])}


def cmd_compute(args):
    word = parse_word(args.word, args.n)
    ann = annotate(word)
    m = gassner(word)
    report = {
        "command": "compute",
        "inputs": {"n": args.n, "word": format_word(word)},
        "outcome": "value",
        "tau": list(ann.tau),
        "over": list(ann.over),
        "matrix": m.to_json_obj(),
    }
    lines = ["word: %s" % (format_word(word) or "(empty)"),
             "over strands: %s" % " ".join(map(str, ann.over)),
             "tau: [%s]" % ", ".join(map(str, ann.tau)),
             m.pretty()]
    return report, lines, EXIT_PASS


def cmd_verify(args):
    word = parse_word(args.word, args.n)
    rep = verify_unitarity(word)
    report = {
        "command": "verify",
        "inputs": {"n": args.n, "word": format_word(word)},
        "outcome": "pass" if rep.holds else "fail",
        "tau": list(annotate(word).tau),
        "left": rep.left.to_json_obj(),
        "right": rep.right.to_json_obj(),
    }
    lines = ["unitarity identity: %s" % ("holds" if rep.holds else "FAILS")]
    if not rep.holds:
        report["first_difference"] = _difference(rep)
        lines.append("first difference: %s" % report["first_difference"])
    return report, lines, EXIT_PASS if rep.holds else EXIT_FAIL


def cmd_verify_vw(args):
    word = parse_vw_word(args.word, args.n)
    rep = verify_unitarity_vw(word)
    report = {
        "command": "verify-vw",
        "inputs": {"n": args.n, "word": str(word)},
        "outcome": "pass" if rep.holds else "fail",
        "left": rep.left.to_json_obj(),
        "right": rep.right.to_json_obj(),
    }
    lines = ["unitarity identity on v/w word: %s" % ("holds" if rep.holds else "FAILS")]
    if not rep.holds:
        report["first_difference"] = _difference(rep)
        lines.append("first difference: %s" % report["first_difference"])
    return report, lines, EXIT_PASS if rep.holds else EXIT_FAIL


def cmd_selftest(args):
    res = run_sweep(max_n=args.max_n, max_len=args.max_len, cases=args.cases, seed=args.seed)
    report = {"command": "selftest",
              "inputs": {"max_n": args.max_n, "max_len": args.max_len,
                         "cases": args.cases, "seed": args.seed},
              "outcome": "pass" if res.ok else "fail"}
    report.update(res.to_json_obj())
    lines = ["seed %s, %d cases" % (args.seed, args.cases)]
    for name, c in res.counts.items():
        lines.append("%-16s passed %5d  failed %5d" % (name, c["passed"], c["failed"]))
    for f in res.failures:
        lines.append("FAIL case %(case)d (n=%(n)d): %(property)s" % f)
    return report, lines, EXIT_PASS if res.ok else EXIT_FAIL


def _parse_thetas(text, n):
    try:
        thetas = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError("cannot parse --theta %r" % text) from None
    if len(thetas) != n:
        raise InputError("--theta needs %d angles, got %d" % (n, len(thetas)))
    return TorusPoint(thetas)


def cmd_numeric(args):
    word = parse_word(args.word, args.n)
    if args.theta is None:
        raise InputError("numeric needs --theta")
    point = _parse_thetas(args.theta, args.n)
    if not is_pure(word):
        raise PreconditionError("word %r is not a pure braid" % format_word(word))
    out = {}
    ok = True
    for name, build, check in (("psi", psi_numeric, check_psi_unitarity),
                               ("psi_prime", psi_prime_numeric, check_psi_prime_unitarity)):
        form = build(point)
        herm = hermitian_residual(form)
        residual = check(word, point)
        pd = bool(herm <= HERMITIAN_TOL and is_positive_definite(form))
        out[name] = {"hermitian_residual": herm, "positive_definite": pd,
                     "pivots": [float(p) for p in hermitian_pivots(form)],
                     "unitarity_residual": residual}
        ok = ok and herm <= HERMITIAN_TOL and residual <= args.tol
    report = {"command": "numeric",
              "inputs": {"n": args.n, "word": format_word(word),
                         "theta": list(point.thetas), "tol": args.tol},
              "outcome": "pass" if ok else "fail"}
    report.update(out)
    lines = []
    for name in ("psi", "psi_prime"):
        r = out[name]
        lines.append("%-9s hermitian %.3e  positive definite %-5s  unitarity residual %.3e"
                     % (name, r["hermitian_residual"], r["positive_definite"],
                        r["unitarity_residual"]))
    return report, lines, EXIT_PASS if ok else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gassner", description="Exact Gassner invariant of braids and its unitarity.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, word=True):
        p.add_argument("-n", type=int, required=True, help="number of strands")
        if word:
            p.add_argument("word", help='braid word, e.g. "1 -3 2"')
        p.add_argument("--format", choices=("json", "pretty"), default="json")

    p = sub.add_parser("compute", help="print Gamma(b), the permutation and over strands")
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check the unitarity identity exactly")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-vw", help='same check for a v/w word, e.g. "1,2 -2,3"')
    common(p)
    p.set_defaults(func=cmd_verify_vw)

    p = sub.add_parser("selftest", help="randomized sweep of all exact identities")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--max-len", type=int, default=20)
    p.add_argument("--cases", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "pretty"), default="json")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("numeric", help="Hermitian forms and unitarity on the unit torus")
    common(p)
    p.add_argument("--theta", help="comma-separated angles in radians, one per strand")
    p.add_argument("--tol", type=float, default=UNITARITY_TOL)
    p.set_defaults(func=cmd_numeric)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report, lines, code = args.func(args)
    except (BraidParseError, InputError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print("precondition failed: %s" % exc, file=sys.stderr)
        return EXIT_PRECONDITION
    report["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    _emit(report, args.format, lines)
    return code


if __name__ == "__main__":
    sys.exit(main())
