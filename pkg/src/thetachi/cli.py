"""Command-line front end.

Subcommands:

* ``eval``      - evaluate the theta Euler characteristics for one pair;
* ``enumerate`` - tabulate all admissible orthogonal pairs in a box;
* ``verify``    - run the identity suite and report exact residuals;
* ``kummer``    - Kummer / Hilbert-scheme values and their consistency.

Exit status: 0 on success (all identities pass for ``verify``), 1 on a
verification failure, 2 on usage or input errors.  Every number in every
output is an exact decimal string; no floating point appears anywhere.
"""

from __future__ import annotations

import argparse
import json
import sys

from .formulas import (
    FormulaError,
    KummerClass,
    chi_arbitrary_det,
    chi_fixed_det,
    chi_fixed_fm_det,
    chi_from_bb,
    chi_hilbert,
    chi_kummer,
    etale_cover_residual,
)
from .identities import (
    ALL_IDENTITIES,
    SideCondition,
    UnknownIdentity,
    run_suite,
    suite_passed,
)
from .mukai import check_assumptions, dv, euler_chi_tensor, parse_vector
from .pairs import enumerate_rows, rows_to_csv, rows_to_json

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2

CONVENTIONS = {
    "hilbert_scheme_vector": "Pic0 x Hilb^n is represented by v = (1, 0, -n), giving d_v = n",
    "lambda_hat": "degree-two part of the transform of lambda; -(d f3^f4 + e f1^f2)",
    "dual_polarization": "H_hat = -lambda_hat(H); H_hat^2 = 2n",
    "fm_vector": "(r, k, chi) -> (chi, -k, r) in the H_hat basis",
}


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _print_json(payload: dict):
    print(json.dumps(payload, indent=2))


def cmd_eval(args) -> int:
    try:
        v = parse_vector(args.v, args.n)
        w = parse_vector(args.w, args.n)
    except ValueError as exc:
        return _fail_usage(str(exc))
    chi_vw = euler_chi_tensor(v, w)
    if chi_vw != 0:
        return _fail_usage(
            f"vectors are not orthogonal: chi(v (x) w) = {chi_vw} (must be 0)"
        )
    results = {}
    wanted = ("main", "two", "three") if args.theorem == "all" else (args.theorem,)
    evaluators = {
        "main": chi_fixed_det,
        "two": chi_fixed_fm_det,
        "three": chi_arbitrary_det,
    }
    failures = []
    for name in wanted:
        try:
            results[name] = evaluators[name](v, w).to_json_dict()
        except FormulaError as exc:
            results[name] = {"error": str(exc)}
            failures.append(name)
    if failures and args.theorem != "all":
        return _fail_usage(results[failures[0]]["error"])
    payload = {
        "n": str(args.n),
        "v": v.text(),
        "w": w.text(),
        "d_v": str(dv(v)),
        "d_w": str(dv(w)),
        "orthogonal": True,
        "results": results,
        "admissibility": {
            "v": check_assumptions(v, w).to_json_dict(),
            "w": check_assumptions(w, v).to_json_dict(),
        },
        "conventions": CONVENTIONS,
    }
    if args.verbose:
        print("conventions in use:", file=sys.stderr)
        for key, value in CONVENTIONS.items():
            print(f"  {key}: {value}", file=sys.stderr)
    _print_json(payload)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    rows, summary = enumerate_rows(args.n, args.max_rank, args.max_k, args.max_chi)
    text = rows_to_csv(rows, summary) if args.format == "csv" else rows_to_json(rows, summary)
    try:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        return _fail_usage(f"cannot write {args.out}: {exc}")
    print(
        f"wrote {summary['pairs']} pairs ({summary['vectors']} vectors) to {args.out}; "
        f"nonintegral: {len(summary['nonintegral_rows'])}"
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    only = args.only if args.only else None
    if only:
        unknown = [name for name in only if name not in ALL_IDENTITIES]
        if unknown:
            return _fail_usage(f"unknown identities: {', '.join(unknown)}")
    try:
        reports = run_suite(args.seed, args.trials, only)
    except (UnknownIdentity, SideCondition, ValueError) as exc:
        return _fail_usage(str(exc))
    # stdout carries the pure JSON array; the human summary goes to stderr
    print(json.dumps([report.to_json_dict() for report in reports], indent=2))
    passed = suite_passed(reports)
    counts = f"{sum(r.passed for r in reports)}/{len(reports)}"
    print(f"identities: {counts} passed", file=sys.stderr)
    return EXIT_OK if passed else EXIT_VERIFY_FAIL


def cmd_kummer(args) -> int:
    if args.n < 1:
        return _fail_usage("n must be at least 1")
    kc = KummerClass(args.chiD, args.r, args.n)
    kummer = chi_kummer(kc)
    hilbert = chi_hilbert(args.n, args.chiD, args.r)
    residual = etale_cover_residual(args.n, args.chiD, args.r)
    payload = {
        "n": str(args.n),
        "chiD": str(args.chiD),
        "r": str(args.r),
        "kummer": kummer.to_json_dict(),
        "hilbert": hilbert.to_json_dict(),
        "pull1_residual": str(residual),
    }
    if args.n >= 3:
        payload["bb_cross_value"] = chi_from_bb(kc).to_json_dict()
    _print_json(payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetachi",
        description="Exact theta-bundle Euler characteristics on abelian-surface moduli",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate the formulas for one pair")
    p_eval.add_argument("--n", type=int, required=True, help="H^2 = 2n")
    p_eval.add_argument("--v", required=True, help="vector as r,k,chi")
    p_eval.add_argument("--w", required=True, help="vector as r,k,chi")
    p_eval.add_argument("--theorem", choices=("main", "two", "three", "all"),
                        default="all")
    p_eval.add_argument("--verbose", action="store_true",
                        help="print the convention banner to stderr")
    p_eval.set_defaults(func=cmd_eval)

    p_enum = sub.add_parser("enumerate", help="tabulate admissible orthogonal pairs")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--max-rank", type=int, required=True)
    p_enum.add_argument("--max-k", type=int, required=True)
    p_enum.add_argument("--max-chi", type=int, required=True)
    p_enum.add_argument("--out", required=True, help="output file path")
    p_enum.add_argument("--format", choices=("csv", "json"), default="csv")
    p_enum.set_defaults(func=cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run the identity suite")
    p_verify.add_argument("--all", action="store_true",
                          help="run every registered identity (default)")
    p_verify.add_argument("--only", nargs="+", metavar="ID",
                          help=f"subset of: {', '.join(ALL_IDENTITIES)}")
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--trials", type=int, default=200)
    p_verify.set_defaults(func=cmd_verify)

    p_kummer = sub.add_parser("kummer", help="Kummer and Hilbert-scheme values")
    p_kummer.add_argument("--n", type=int, required=True)
    p_kummer.add_argument("--chiD", type=int, required=True)
    p_kummer.add_argument("--r", type=int, required=True)
    p_kummer.set_defaults(func=cmd_kummer)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors; normalize other codes
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
