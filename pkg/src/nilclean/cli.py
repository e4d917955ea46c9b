"""Command-line front end.

Every subcommand prints one JSON document (sorted keys) on stdout. Exit
status: 0 success, 1 malformed input, 2 negative mathematical outcome.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from . import __version__, kernels
from .classifier import (
    NOT_NIL_CLEAN,
    Certificate,
    classify,
    decompose,
    enumerate_companions,
    trace_conditions,
)
from .companion import (
    CompanionSpec,
    companion,
    complete_fixed_leading,
    complete_with_charpoly,
    nil_clean_decompose_with_target,
)
from .errors import NilCleanError, ParseError
from .fields import parse_elem, parse_field, to_json_value
from .matrix import charpoly, is_idempotent, mat_from_json, mat_to_json, minpoly, rank
from .oracle import DEFAULT_MAX_CANDIDATES, PRECOMPUTED, SearchBudget, oracle_search
from .poly import Poly, parse_poly, poly_to_json

log = logging.getLogger("nilclean")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NEGATIVE = 2


def _coeffs(text, spec):
    t = (text or "").strip()
    if not t:
        return []
    return [parse_elem(tok, spec) for tok in t.split(",")]


def _companion_arg(args) -> CompanionSpec:
    spec = parse_field(args.field)
    c = _coeffs(args.c, spec)
    if not c:
        raise ParseError("--c needs at least one coefficient")
    return CompanionSpec(spec, tuple(c))


def _load_json_arg(value: str):
    """``value`` is either inline JSON or a path to a JSON file (``-`` for stdin)."""
    if value == "-":
        text = sys.stdin.read()
    elif os.path.exists(value):
        with open(value) as fh:
            text = fh.read()
    else:
        text = value
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def cmd_classify(args):
    cs = _companion_arg(args)
    v = classify(cs)
    out = v.to_json()
    out["trace_conditions"] = trace_conditions(companion(cs)).to_json()
    return out, (EXIT_NEGATIVE if v.verdict == NOT_NIL_CLEAN else EXIT_OK)


def cmd_decompose(args):
    cs = _companion_arg(args)
    v = classify(cs)
    cert = decompose(cs, v)
    out = {"classification": v.to_json(), "certificate": cert.to_json() if cert else None}
    return out, (EXIT_OK if cert is not None else EXIT_NEGATIVE)


def cmd_decompose_target(args):
    cs = _companion_arg(args)
    g = parse_poly(args.g or "", cs.spec)
    e, m = nil_clean_decompose_with_target(cs, args.k, g)
    out = {
        "E": mat_to_json(e),
        "M": mat_to_json(m),
        "charpoly_M": poly_to_json(charpoly(m)),
        "checks": {
            "sum_ok": e + m == companion(cs),
            "idempotent_ok": is_idempotent(e),
            "rank_E": rank(e),
        },
    }
    return out, EXIT_OK


def cmd_complete(args):
    spec = parse_field(args.field)
    target = _coeffs(args.target, spec)
    ctail = _coeffs(args.ctail, spec)
    if args.alpha_top is not None:
        alphas, m, f = complete_fixed_leading(parse_elem(args.alpha_top, spec), target, ctail)
    else:
        f = Poly(spec, target)
        alphas, m = complete_with_charpoly(f, ctail)
    out = {
        "alphas": [to_json_value(a) for a in alphas],
        "M": mat_to_json(m),
        "target": poly_to_json(f),
        "charpoly_M": poly_to_json(charpoly(m)),
        "minpoly_M": poly_to_json(minpoly(m)),
    }
    return out, EXIT_OK


def cmd_enumerate(args):
    census = enumerate_companions(args.p, args.n, budget=args.budget or 10**7, jobs=args.jobs)
    return census.to_json(), EXIT_OK


def cmd_oracle(args):
    doc = _load_json_arg(args.matrix)
    spec = parse_field(args.field) if args.field else None
    a = mat_from_json(doc, spec)
    budget = SearchBudget(args.budget or DEFAULT_MAX_CANDIDATES, args.strategy, args.jobs)
    res = oracle_search(a, budget)
    out = {
        "found": res.found,
        "E": mat_to_json(res.E) if res.found else None,
        "N": mat_to_json(res.N) if res.found else None,
        "candidates_checked": res.candidates_checked,
        "idempotents_checked": res.idempotents_checked,
    }
    return out, (EXIT_OK if res.found else EXIT_NEGATIVE)


def cmd_verify(args):
    doc = _load_json_arg(args.certificate)
    if isinstance(doc, dict) and "outputs" in doc:
        doc = doc["outputs"]
    if isinstance(doc, dict) and "certificate" in doc:
        doc = doc["certificate"]
    if not isinstance(doc, dict):
        raise ParseError("no certificate found in input")
    try:
        cert = Certificate.from_json(doc)
    except KeyError as exc:
        raise ParseError(f"certificate is missing {exc}") from None
    checks = cert.checks
    return {"checks": checks, "valid": all(checks.values())}, (EXIT_OK if all(checks.values()) else EXIT_NEGATIVE)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilclean", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def field_opt(p, required=True):
        p.add_argument("--field", required=required, help="'q' or 'fp:<p>'")

    p = sub.add_parser("classify", help="nil-clean verdict for a companion matrix")
    field_opt(p)
    p.add_argument("--c", required=True, help="c_0,...,c_{n-1}")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="certified decomposition of a companion matrix")
    field_opt(p)
    p.add_argument("--c", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("decompose-target", help="C = E + M with prescribed rank and charpoly tail")
    field_opt(p)
    p.add_argument("--c", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--g", default="", help="polynomial of degree <= n-2, low-to-high")
    p.set_defaults(func=cmd_decompose_target)

    p = sub.add_parser("complete", help="first-row completion to a prescribed charpoly")
    field_opt(p)
    p.add_argument("--target", required=True, help="monic target low-to-high (or f_0..f_{n-2} with --alpha-top)")
    p.add_argument("--ctail", default="", help="c_1,...,c_{n-1}")
    p.add_argument("--alpha-top", default=None, help="pin alpha_{n-1}")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("enumerate", help="census of all companion matrices over F_p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("oracle", help="brute-force nil-clean search over F_p")
    field_opt(p, required=False)
    p.add_argument("--matrix", required=True, help="matrix JSON, a file path, or '-' for stdin")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--strategy", choices=["FullScan", "Precomputed"], default=PRECOMPUTED)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="recompute the checks of a certificate")
    p.add_argument("certificate", nargs="?", default="-", help="JSON file or inline JSON (default: stdin)")
    p.set_defaults(func=cmd_verify)
    return parser


def _inputs(args) -> dict:
    skip = {"func", "command", "verbose"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    start = time.perf_counter()
    try:
        outputs, code = args.func(args)
    except (NilCleanError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    elapsed = time.perf_counter() - start
    report = {
        "command": args.command,
        "inputs": _inputs(args),
        "outputs": outputs,
        "version": __version__,
    }
    json.dump(report, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")
    print(f"{args.command}: {elapsed:.3f}s (kernels: {kernels.BACKEND})", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
