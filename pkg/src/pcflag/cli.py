"""Command-line surface.

Thin client over the report layer shared with the HTTP service.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import reports
from .errors import PCFlagError


def _parse_subset(text: str) -> list[int]:
    if not text:
        return []
    try:
        return [int(tok) - 1 for tok in text.split(",")]
    except ValueError:
        raise PCFlagError(f"--subset expects comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcflag",
        description="Exact invariants of p-adic reflection groups and flag varieties",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="built-in group catalog")
    cat_sub = cat.add_subparsers(dest="subcommand", required=True)
    cat_sub.add_parser("list", help="list catalog entries")

    grp = sub.add_parser("group", help="group invariants")
    grp_sub = grp.add_subparsers(dest="subcommand", required=True)
    info = grp_sub.add_parser("info", help="order, reflections, degrees, r', kappa, l, d")
    info.add_argument("group", help="catalog name or group file path")
    info.add_argument("--prime", type=int, required=True)
    info.add_argument("--precision", type=int, default=None)

    flag = sub.add_parser("flag", help="flag variety cohomology")
    flag_sub = flag.add_subparsers(dest="subcommand", required=True)
    poin = flag_sub.add_parser("poincare", help="Poincare polynomial of G/C_I")
    poin.add_argument("group")
    poin.add_argument("--prime", type=int, required=True)
    poin.add_argument("--precision", type=int, default=None)
    poin.add_argument("--subset", default="", help="1-based generating reflections, e.g. 1,2")

    adj = sub.add_parser("adjoint", help="homology of the adjoint space A_G")
    adj.add_argument("group")
    adj.add_argument("--prime", type=int, required=True)
    adj.add_argument("--precision", type=int, default=None)

    spl = sub.add_parser("splitting", help="stable splitting of BS^1")
    spl_sub = spl.add_subparsers(dest="subcommand", required=True)
    ver = spl_sub.add_parser("verify", help="idempotent and transfer identities")
    ver.add_argument("--prime", type=int, required=True)
    ver.add_argument("--l", type=int, required=True, dest="l")
    ver.add_argument("--degree-bound", type=int, default=None)
    ver.add_argument("--precision", type=int, default=None)

    cen = sub.add_parser("centralizer", help="centralizer of a primitive reflection")
    cen.add_argument("group")
    cen.add_argument("--prime", type=int, required=True)
    cen.add_argument("--reflection", type=int, required=True,
                     help="index into the group's reflection list")
    cen.add_argument("--precision", type=int, default=None)

    emb = sub.add_parser("embed", help="embed generator matrices into Z_p")
    emb.add_argument("group")
    emb.add_argument("--prime", type=int, required=True)
    emb.add_argument("--precision", type=int, default=None)

    return parser


def _run(args) -> dict:
    if args.command == "catalog":
        return reports.catalog_report()
    if args.command == "group":
        return reports.group_info_report(args.group, args.prime, args.precision)
    if args.command == "flag":
        return reports.flag_report(
            args.group, args.prime, _parse_subset(args.subset), args.precision
        )
    if args.command == "adjoint":
        return reports.adjoint_report(args.group, args.prime, args.precision)
    if args.command == "splitting":
        return reports.splitting_report(
            args.prime, args.l, args.degree_bound, args.precision
        )
    if args.command == "centralizer":
        return reports.centralizer_report(
            args.group, args.prime, args.reflection, args.precision
        )
    if args.command == "embed":
        return reports.embed_report(args.group, args.prime, args.precision)
    raise AssertionError(f"unhandled command {args.command}")


def _print_human(command: str, report: dict, out) -> None:
    if command == "catalog":
        for entry in report["entries"]:
            print(f"{entry['name']:10s} {entry['description']}", file=out)
        return
    if command == "group":
        print(f"group {report['name']} at p={report['prime']}", file=out)
        for key in ("order", "reflections", "rank", "degrees",
                    "dimension", "rPrime", "kappa", "l"):
            print(f"  {key:12s} {report[key]}", file=out)
        return
    if command == "flag":
        def term(d, c):
            if d == 0:
                return str(c)
            factor = "t" if d == 1 else f"t^{d}"
            return factor if c == 1 else f"{c}{factor}"

        poly = " + ".join(
            term(d, c) for d, c in enumerate(report["poincare"]) if c
        )
        subset = ",".join(map(str, report["subset"])) or "empty"
        print(f"flag Poincare of {report['name']} (I = {subset}): {poly}", file=out)
        print(f"  Euler characteristic {report['euler']}", file=out)
        return
    if command == "adjoint":
        print(
            f"adjoint space of {report['name']} at p={report['prime']}: "
            f"dim {report['dim']}, top rank {report['topRank']}, "
            f"Euler {report['euler']}",
            file=out,
        )
        if "ranks" in report:
            degrees = ", ".join(sorted(report["ranks"], key=int))
            print(f"  reduced homology in degrees {{{degrees}}}", file=out)
        print(f"  verdict: {report['verdict']}", file=out)
        print("  E1 page (p, q, rank):", file=out)
        for p_, q_, r_ in report["page"]:
            print(f"    {p_} {q_} {r_}", file=out)
        return
    if command == "splitting":
        print(
            f"splitting checks at p={report['p']}, l={report['l']}, "
            f"degrees up to {report['degreeBound']}",
            file=out,
        )
        print(f"  Umkehr residues {report['umkehrResidues']}", file=out)
        print(f"  BG residues     {report['bgResidues']}", file=out)
        for name in report["checksPassed"]:
            print(f"  pass {name}", file=out)
        for name in report["checksFailed"]:
            print(f"  FAIL {name}", file=out)
        return
    if command == "centralizer":
        print(
            f"centralizer of reflection {report['reflection']} "
            f"(order {report['order']}) in {report['name']}:",
            file=out,
        )
        print(f"  Weyl degrees {report['weylDegrees']}", file=out)
        print(f"  dimension    {report['dimCentralizer']} (group: {report['dimGroup']})", file=out)
        print(f"  rank-1 quotient check: {report['rankOneQuotient']}", file=out)
        return
    if command == "embed":
        print(
            f"embedding of {report['name']} into GL over Z_{report['prime']} "
            f"mod {report['prime']}^{report['precision']}",
            file=out,
        )
        print(f"  lifted modulus {report['modulus']}", file=out)
        for i, m in enumerate(report["matrices"]):
            print(f"  generator {i}: {m}", file=out)
        return
    json.dump(report, out, indent=2)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = _run(args)
    except PCFlagError as exc:
        payload = {"error": exc.name, "message": str(exc)}
        if args.json:
            json.dump(payload, sys.stderr)
            print(file=sys.stderr)
        else:
            print(f"error [{exc.name}]: {exc}", file=sys.stderr)
        return 1
    if args.json:
        json.dump(report, sys.stdout, indent=2, sort_keys=True)
        print()
    else:
        _print_human(args.command, report, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
