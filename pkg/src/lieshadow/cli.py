"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import free_lie, hilton_milnor
from .errors import LieShadowError
from .hall_words import OrderPolicy, enumerate_hall_basis, make_alphabet, parse_word
from .homotopy_series import DEFAULT_TRUNCATION, FormalObject, MultiSeries

TRUNCATION_ENV = "LIESHADOW_TRUNCATION"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_gens(text: str) -> tuple[list[str], list[int]]:
    """``x:0,y:2`` -> names and connectivities (default connectivity 0)."""
    names, conns = [], []
    for item in text.split(","):
        name, _, conn = item.strip().partition(":")
        try:
            c = int(conn) if conn else 0
        except ValueError:
            raise UsageError(f"bad connectivity in {item!r}") from None
        if c < 0:
            raise UsageError(f"{name}: connectivity must be >= 0 (objects must be connected)")
        names.append(name)
        conns.append(c)
    try:
        make_alphabet(names)
    except LieShadowError as exc:
        raise UsageError(str(exc)) from None
    return names, conns


def _truncation(args) -> int:
    if args.truncation is not None:
        n = args.truncation
    elif os.environ.get(TRUNCATION_ENV):
        try:
            n = int(os.environ[TRUNCATION_ENV])
        except ValueError:
            raise UsageError(f"{TRUNCATION_ENV} must be an integer") from None
    else:
        n = DEFAULT_TRUNCATION
    if n < 1:
        raise UsageError("truncation must be >= 1")
    return n


def _positive(name, value):
    if value is not None and value < 1:
        raise UsageError(f"{name} must be >= 1")
    return value


def _objects(names, conns, N):
    return [FormalObject.sphere_like(nm, i, len(names), c, N) for i, (nm, c) in enumerate(zip(names, conns), 1)]


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- subcommands ------------------------------------------------------------


def cmd_hall(args):
    names, _ = parse_gens(args.gens)
    table = enumerate_hall_basis(len(names), _positive("--max-len", args.max_len), OrderPolicy(args.order), names)
    _emit(table.to_json() if args.output == "json" else table.to_text())
    return EXIT_OK


def cmd_witt(args):
    if args.gens.isdigit():
        n = int(args.gens)
    else:
        n = len(parse_gens(args.gens)[0])
    if n < 1:
        raise UsageError("need at least one generator")
    counts = [free_lie.witt_dimension(n, l) for l in range(1, _positive("--max-len", args.max_len) + 1)]
    if args.output == "json":
        _emit(json.dumps([{"length": l, "count": c} for l, c in enumerate(counts, 1)]))
    else:
        _emit(",".join(map(str, counts)))
    return EXIT_OK


def cmd_rewrite(args):
    names, _ = parse_gens(args.gens)
    try:
        expr = parse_word(args.expr, names)
    except LieShadowError as exc:
        raise UsageError(str(exc)) from None
    max_len = args.max_len if args.max_len is not None else expr.length
    table = enumerate_hall_basis(len(names), _positive("--max-len", max_len), OrderPolicy(args.order), names)
    result = free_lie.rewrite_to_hall(expr, table)
    _emit(result.to_json() if args.output == "json" else result.format())
    return EXIT_OK


def cmd_decompose(args):
    names, conns = parse_gens(args.gens)
    if (args.max_len is None) == (args.min_conn is None):
        raise UsageError("give exactly one of --max-len and --min-conn")
    _positive("--max-len", args.max_len)
    _positive("--min-conn", args.min_conn)
    objs = _objects(names, conns, _truncation(args))
    d = hilton_milnor.decompose(objs, args.max_len, args.min_conn, OrderPolicy(args.order))
    _emit(d.to_json() if args.output == "json" else d.to_text())
    return EXIT_OK


def _series_checks(which, names, conns, N, rng=None):
    n = len(names)
    if rng is None:
        fs = [MultiSeries.gen(i, n, N, power=c + 1) for i, c in enumerate(conns, 1)]
    else:
        fs = [hilton_milnor.random_series(rng, n, N) for _ in range(n)]
        fs = [f if f.order() else MultiSeries.gen(i, n, N) for i, f in enumerate(fs, 1)]
    wedge = sum(fs[1:], fs[0])
    rest = sum(fs[2:], fs[1]) if n > 1 else MultiSeries.zero(n, N)
    if which == "hilton-milnor":
        objs = [FormalObject(nm, 0 if rng else c, f) for nm, c, f in zip(names, conns, fs)]
        return hilton_milnor.hm_series_checks(objs, N)
    if which == "james":
        return hilton_milnor.james_checks(wedge, N)
    if which == "fundamental":
        return hilton_milnor.fundamental_split_checks(fs[0], rest, N)
    return hilton_milnor.half2_checks(fs[0], rest, N)


def _describe_mismatch(check):
    e, a, b = check.mismatch
    return f"{check.label}: coefficient at exponents (s,t...)={list(e)} differs: lhs={a} rhs={b}"


def cmd_verify(args):
    names, conns = parse_gens(args.gens)
    N = _truncation(args)
    records = []
    if args.which == "basis":
        degree = _positive("--max-len", args.max_len) or 5
        table = enumerate_hall_basis(len(names), degree, OrderPolicy(args.order), names)
        report = free_lie.verify_hall_basis(len(names), degree, table)
        records.append({"check": "basis", "passed": bool(report), **report.to_dict()})
        detail = f"ranks={report.ranks} lie_dims={report.lie_dims}"
        lines = [f"{'PASS' if report else 'FAIL'} basis (n={len(names)}, degree={degree}) {detail}"]
    else:
        rng = random.Random(args.seed) if args.random else None
        samples = [_series_checks(args.which, names, conns, N)]
        for _ in range(args.random):
            samples.append(_series_checks(args.which, names, conns, N, rng))
        lines = []
        failed = [c for checks in samples for c in checks if not c.ok]
        for c in failed[:1]:
            lines.append("FAIL " + _describe_mismatch(c))
            e, a, b = c.mismatch
            records.append({"check": c.label, "passed": False, "exponents": list(e), "lhs": a, "rhs": b})
        total = sum(len(s) for s in samples)
        if not failed:
            lines.append(f"PASS {args.which} (n={len(names)}, N={N}, {total} identities)")
            records.append({"check": args.which, "passed": True, "identities": total})
    passed = all(r["passed"] for r in records)
    _emit(json.dumps(records) if args.output == "json" else "\n".join(lines))
    return EXIT_OK if passed else EXIT_FAIL


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lieshadow", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, gens_help="comma-separated generators, name[:connectivity]"):
        p.add_argument("--gens", required=True, help=gens_help)
        p.add_argument("--output", choices=["text", "json"], default="text")
        p.add_argument("--order", choices=[p.value for p in OrderPolicy], default=OrderPolicy.CREATION.value)

    p = sub.add_parser("hall", help="enumerate a Hall basis")
    common(p)
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_hall)

    p = sub.add_parser("witt", help="Witt dimensions per degree")
    common(p, "number of generators, or a generator list")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_witt)

    p = sub.add_parser("rewrite", help="rewrite a bracket expression in the Hall basis")
    p.add_argument("expr")
    common(p)
    p.add_argument("--max-len", type=int, help="basis length (default: expression length)")
    p.set_defaults(func=cmd_rewrite)

    p = sub.add_parser("decompose", help="Hilton-Milnor factor list")
    common(p)
    p.add_argument("--max-len", type=int)
    p.add_argument("--min-conn", type=int)
    p.add_argument("--truncation", type=int, help=f"series truncation (env {TRUNCATION_ENV}, default 8)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run a verification")
    p.add_argument("which", choices=["james", "fundamental", "half2", "hilton-milnor", "basis"])
    common(p)
    p.add_argument("--truncation", type=int, help=f"series truncation (env {TRUNCATION_ENV}, default 8)")
    p.add_argument("--max-len", type=int, help="degree for the basis check (default 5)")
    p.add_argument("--random", type=int, default=0, metavar="K", help="also check K random series inputs")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, LieShadowError) as exc:
        parser.print_usage(sys.stderr)
        print(f"lieshadow {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
