"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or word-grammar
error, 3 unsupported (family, d) parameters.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import reps as R
from .bricks import atlas_report
from .deformation import deformation_report
from .presentations import (SCHEMA_VERSION, UnsupportedParameter,
                            build_algebra)
from .verify import SUITES, results_to_json, run_suites
from .witt import default_precision
from .wittrings import mod2_reduction, p_poly, verify_lemma_tower
from .words import WordError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3


def _emit(payload: dict, text: str, args) -> None:
    out = json.dumps(payload, indent=2) if args.json else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(payload, indent=2) + "\n")
    print(out)


def _add_algebra_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=("I", "II", "III"))
    p.add_argument("--d", required=True, type=int)
    p.add_argument("--kind", default="full", choices=("full", "bar"))


def _add_format_flags(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", dest="json", action="store_false")
    p.set_defaults(json=False)
    p.add_argument("--out", default=None, help="also write JSON to a file")


def cmd_algebra(args) -> int:
    algebra = build_algebra(args.family, args.d, args.kind)
    cartan = algebra.cartan()
    lines = [f"algebra family {args.family} d={args.d} kind={args.kind}",
             f"dimension {algebra.dim}",
             f"loewy length {algebra.loewy_length}",
             "cartan " + str(cartan),
             "projective radical series:"]
    payload = algebra.to_json()
    payload["projectives"] = {}
    for i in range(3):
        series = R.projective(algebra, i).radical_series()
        payload["projectives"][str(i)] = [list(t) for t in series]
        lines.append(f"  P_{i} length {len(series)}: "
                     + " / ".join(str(tuple(t)) for t in series))
    _emit(payload, "\n".join(lines), args)
    return EXIT_OK


def cmd_module(args) -> int:
    algebra = build_algebra(args.family, args.d, args.kind)
    m = R.string_module(algebra, args.word)
    action = args.action
    if action == "show":
        text = (f"module over {args.family} d={args.d} kind={args.kind}: "
                f"dims {tuple(m.dims)}, radical series "
                + " / ".join(str(tuple(t)) for t in m.radical_series()))
        _emit(m.to_json(), text, args)
    elif action == "radser":
        series = [list(t) for t in m.radical_series()]
        _emit({"schema_version": SCHEMA_VERSION, "radical_series": series},
              " / ".join(str(tuple(t)) for t in series), args)
    elif action == "end":
        v = R.end_dim(m)
        _emit({"schema_version": SCHEMA_VERSION, "end_dim": v}, str(v), args)
    elif action == "stable-end":
        v = R.stable_end_dim(m)
        _emit({"schema_version": SCHEMA_VERSION, "stable_end_dim": v},
              str(v), args)
    elif action == "ext-self":
        v = R.ext1(m, m)
        _emit({"schema_version": SCHEMA_VERSION, "ext1_self": v}, str(v),
              args)
    elif action == "omega":
        om = R.omega(m)
        text = (f"omega dims {tuple(om.dims)}, radical series "
                + " / ".join(str(tuple(t)) for t in om.radical_series()))
        _emit(om.to_json(), text, args)
    return EXIT_OK


def _parse_d_range(spec: str):
    parts = spec.split("..")
    if len(parts) == 1:
        lo = hi = int(parts[0])
    elif len(parts) == 2:
        lo, hi = int(parts[0]), int(parts[1])
    else:
        raise ValueError(f"bad d-range {spec!r}; expected a..b")
    if lo > hi:
        raise ValueError(f"empty d-range {spec!r}")
    return lo, hi


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.seed is not None:
        R.DEFAULT_SEED = args.seed
    results = run_suites(names, args.d_range)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] {r.suite}/{r.check} {r.params}"
              + (f" {r.detail}" if r.detail and not r.passed else ""))
    payload = results_to_json(results)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(payload, indent=2) + "\n")
    passed = payload["passed"]
    print(f"{'all passed' if passed else 'FAILURES'} "
          f"({sum(r.passed for r in results)}/{len(results)})")
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def cmd_witt(args) -> int:
    precision = args.precision or default_precision(args.d)
    p = p_poly(args.d, precision)
    report = verify_lemma_tower(args.d, precision)
    payload = {"schema_version": SCHEMA_VERSION, "d": args.d,
               "precision": precision,
               "coefficients": list(p.coeffs),
               "mod2": list(mod2_reduction(p)),
               "verification": report}
    text = "\n".join([
        f"p for d={args.d} at precision 2^{precision}: {p!r}",
        f"mod-2 reduction coefficients: {list(mod2_reduction(p))}",
        f"trace-ring verification: {'PASS' if report['ok'] else 'FAIL'}",
    ])
    _emit(payload, text, args)
    return EXIT_OK if report["ok"] else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverdef",
        description="exact computations with three families of tame "
                    "bound quiver algebras over F2")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("algebra", help="build an algebra and print its data")
    _add_algebra_flags(p)
    _add_format_flags(p)
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("module", help="build a string module and query it")
    _add_algebra_flags(p)
    p.add_argument("--word", required=True,
                   help="path word, e.g. 'delta*beta' or 'gamma*delta^-1'")
    p.add_argument("action", choices=("show", "radser", "end", "stable-end",
                                      "ext-self", "omega"))
    _add_format_flags(p)
    p.set_defaults(func=cmd_module)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", required=True, choices=SUITES + ("all",))
    p.add_argument("--d-range", dest="d_range", required=True,
                   type=_parse_d_range, metavar="a..b")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None,
                   help="write machine-readable results to a JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witt", help="tower polynomial and trace-ring data")
    p.add_argument("--d", required=True, type=int)
    p.add_argument("--precision", type=int, default=None)
    _add_format_flags(p)
    p.set_defaults(func=cmd_witt)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UnsupportedParameter as exc:
        print(f"unsupported parameters: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except WordError as exc:
        print(f"word error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
