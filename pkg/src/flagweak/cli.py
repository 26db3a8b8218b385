"""Command-line front end with stable, scriptable output.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage or parse
error, 3 a resource cap was exceeded. The element cap defaults to the
FLAGWEAK_CAP environment variable when set.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Optional

from . import chains as chains_mod
from . import genfun as genfun_mod
from . import lattice as lattice_mod
from . import order as order_mod
from .checks import SUITES, run_suites
from .core import (
    DEFAULT_ELEMENT_CAP,
    GroupContext,
    identity,
    mu0,
    parse_element,
)
from .errors import CapExceededError, FlagWeakError, ParseError


def _default_cap() -> int:
    env = os.environ.get("FLAGWEAK_CAP")
    if env is None:
        return DEFAULT_ELEMENT_CAP
    try:
        return int(env)
    except ValueError:
        raise ParseError(f"FLAGWEAK_CAP must be an integer, got {env!r}") from None


def _context(args: argparse.Namespace) -> GroupContext:
    cap = args.cap if args.cap is not None else _default_cap()
    return GroupContext(args.r, args.n, cap)


def _endpoints(ctx: GroupContext, args: argparse.Namespace):
    lo = parse_element(ctx, args.from_) if args.from_ else identity(ctx)
    hi = parse_element(ctx, args.to) if args.to else mu0(ctx)
    return lo, hi


def _add_common(p: argparse.ArgumentParser, interval: bool = False) -> None:
    p.add_argument("--r", type=int, required=True, help="number of colors")
    p.add_argument("--n", type=int, required=True, help="number of letters")
    p.add_argument("--cap", type=int, default=None, help="element cap override")
    if interval:
        p.add_argument("--from", dest="from_", default=None, metavar="ELEM")
        p.add_argument("--to", dest="to", default=None, metavar="ELEM")


def cmd_hasse(args: argparse.Namespace) -> int:
    ctx = _context(args)
    if args.from_ or args.to:
        lo, hi = _endpoints(ctx, args)
        diagram = order_mod.build_interval(lo, hi)
    else:
        diagram = order_mod.build_hasse(ctx)
    if args.format == "json":
        print(order_mod.to_json(diagram, signed=args.signed))
    elif args.format == "dot":
        print(order_mod.to_dot(diagram, signed=args.signed))
    else:
        for layer in diagram.layers:
            rank = diagram.elements[layer[0]].finv
            row = " ".join(
                order_mod.format_element(diagram.elements[i], args.signed)
                for i in layer
            )
            print(f"rank {rank}: {row}")
        print(f"nodes={len(diagram.elements)} edges={len(diagram.edges)}")
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = run_suites(names, args.r, args.n, jobs=args.jobs, cap=args.cap)
    for res in results:
        print(res.line())
    return 0 if all(res.ok for res in results) else 1


def cmd_mobius(args: argparse.Namespace) -> int:
    ctx = _context(args)
    if (args.from_ is None) != (args.to is None):
        raise ParseError("--from and --to must be given together")
    if args.from_ is not None:
        lo, hi = _endpoints(ctx, args)
        value = lattice_mod.mobius(lo, hi)
        print(f"{value:+d}" if value else "0")
        return 0
    hasse = order_mod.build_hasse(ctx)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["from", "to", "mobius", "class"])
    writer.writerows(lattice_mod.mobius_rows(hasse, signed=args.signed))
    return 0


def cmd_chains(args: argparse.Namespace) -> int:
    ctx = _context(args)
    lo, hi = _endpoints(ctx, args)
    interval = order_mod.build_interval(lo, hi)
    graph = chains_mod.gamma_graph(interval, cap=args.chain_cap)
    if args.format == "dot":
        print(chains_mod.to_dot(graph))
        return 0
    connected = chains_mod.is_connected(graph)
    note = " (empirical)" if ctx.r > 2 else ""
    line = f"chains={len(graph.words)} connected={str(connected).lower()}{note}"
    if args.diameter:
        if not connected:
            line += " diameter=inf"
        else:
            result = chains_mod.diameter(graph)
            line += f" diameter={result}"
    print(line)
    return 0


def cmd_genfun(args: argparse.Namespace) -> int:
    ctx = _context(args)
    if args.which == "finv":
        poly = genfun_mod.finv_genfun(ctx)
        payload = {"var": "q", "coeffs": list(poly.coeffs)}
    elif args.which == "wdes":
        poly = genfun_mod.wdes_genfun(ctx)
        payload = {"var": "t", "coeffs": list(poly.coeffs)}
    else:
        poly = genfun_mod.bivariate_genfun(ctx)
        payload = {
            "vars": ["q", "t"],
            "terms": [[dq, dt, c] for (dq, dt), c in poly.terms],
        }
    print(json.dumps(payload) if args.json else str(poly))
    return 0


def cmd_present(args: argparse.Namespace) -> int:
    from . import presentation as pres

    ctx = _context(args)
    report = pres.verify_relations_B(ctx)
    ok = report.ok
    for check in report.checks:
        status = "pass" if check.ok else "FAIL"
        print(f"{check.relation}: {status} ({check.checked} instances)")
        for _, indices in check.failures:
            print(f"  failing indices: {indices}")
    if ctx.r == 2 and ctx.n >= 2:
        report_a = pres.verify_relations_A(ctx.n)
        ok = ok and report_a.ok
        for check in report_a.checks:
            status = "pass" if check.ok else "FAIL"
            print(f"{check.relation}: {status} ({check.checked} instances)")
            for _, indices in check.failures:
                print(f"  failing indices: {indices}")
    if args.closure:
        from .core import generators

        order = pres.closure_order(ctx, [g for _, g in generators(ctx)])
        expected = ctx.order
        status = "pass" if order == expected else "FAIL"
        ok = ok and order == expected
        print(f"closure: {status} (order {order}, expected {expected})")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagweak",
        description="Colored permutations with the flag weak order: "
        "diagrams, lattice checks, chain graphs, distributions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hasse", help="emit a cover diagram")
    _add_common(p, interval=True)
    p.add_argument("--format", choices=("json", "dot", "text"), default="text")
    p.add_argument("--signed", action="store_true", help="signed output (r=2)")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("check", help="run oracle-agreement suites")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    _add_common(p)
    p.add_argument("--jobs", type=int, default=1, help="parallel suite workers")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mobius", help="Möbius value or full CSV table")
    _add_common(p, interval=True)
    p.add_argument("--format", choices=("csv",), default="csv")
    p.add_argument("--signed", action="store_true")
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("chains", help="maximal-chain move graph")
    _add_common(p, interval=True)
    p.add_argument("--diameter", action="store_true", help="compute the diameter")
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p.add_argument(
        "--chain-cap",
        type=int,
        default=chains_mod.DEFAULT_CHAIN_CAP,
        help="abort beyond this many chains",
    )
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("genfun", help="distribution polynomials")
    p.add_argument("which", choices=("finv", "wdes", "bivariate"))
    _add_common(p)
    p.add_argument("--json", action="store_true", help="emit coefficient arrays")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("present", help="presentation checks")
    psub = p.add_subparsers(dest="present_command", required=True)
    pv = psub.add_parser("verify", help="check the defining relations")
    _add_common(pv)
    pv.add_argument("--closure", action="store_true", help="also check closure order")
    pv.set_defaults(func=cmd_present)

    return parser


def _normalize_argv(argv: list[str]) -> list[str]:
    # signed element strings start with '-'; glue them to their flag so the
    # parser does not mistake them for options
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--from", "--to"):
            val = next(it, None)
            out.append(tok if val is None else f"{tok}={val}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_normalize_argv(list(argv)))
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, FlagWeakError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
