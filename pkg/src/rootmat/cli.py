"""Command line interface.

Exit code is 0 exactly when every requested check reports PASS.

Note on G2: the matroid of a root system forgets root lengths, so the G2
matroid equals that of I2(6); use the system id "I2_6".
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import graphauto, linmatroid, permgrp, rootsystems, verify


def _add_budget(parser):
    parser.add_argument("--budget", type=int, default=graphauto.DEFAULT_NODE_BUDGET,
                        help="search node budget (default %(default)s)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rootmat",
        description="Verify automorphism groups of root-system matroids. "
                    "System ids: A3, B5, D4, E6/E7/E8, F4, H3, H4, I2_7, "
                    "direct sums like A2+A2+B3. For G2 use I2_6 (same matroid).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="squeeze-certify one system")
    p.add_argument("--system", required=True)
    _add_budget(p)

    p = sub.add_parser("table", help="reproduce the classification table")
    p.add_argument("--families", default=None,
                   help="e.g. A:1..7,B:2..7,D:4..7,E,F,H,I2:5..12 (default: all)")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    _add_budget(p)

    p = sub.add_parser("circuits", help="dump circuits of a system")
    p.add_argument("--system", required=True)
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--format", choices=("text", "json"), default="json")
    _add_budget(p)

    p = sub.add_parser("aut", help="compute the graph automorphism group")
    p.add_argument("--system", required=True)
    p.add_argument("--emit-generators", action="store_true")
    _add_budget(p)

    p = sub.add_parser("wreath", help="check the wreath-product formula on a sum")
    p.add_argument("--spec", required=True, help='e.g. "A2+A2"')
    _add_budget(p)

    p = sub.add_parser("crosscheck", help="compare C3 group against all-circuits group")
    p.add_argument("--system", required=True)
    p.add_argument("--max-order", type=int, default=None)
    _add_budget(p)

    return parser


def _parse_families(spec):
    if spec is None:
        return None
    ids = []
    for part in spec.split(","):
        part = part.strip()
        if ":" in part:
            fam, rng = part.split(":", 1)
            lo, hi = (int(x) for x in rng.split("..")) if ".." in rng else (int(rng),) * 2
            for n in range(lo, hi + 1):
                ids.append(f"{fam}_{n}" if fam == "I2" else f"{fam}{n}")
        elif part == "E":
            ids += ["E6", "E7", "E8"]
        elif part == "F":
            ids.append("F4")
        elif part == "H":
            ids += ["H3", "H4"]
        else:
            ids.append(part)
    return ids


def _print_report(r):
    print(f"{r.system_id:>10}  lines={r.num_lines:<4} |C3|={r.c3_count:<5} "
          f"aut={r.aut_order:<12} expected={r.expected_order:<12} "
          f"known={r.known_group_order:<12} {r.status}  ({r.timing_ms} ms)")


def cmd_verify(args):
    r = verify.verify_theorem(args.system, node_budget=args.budget)
    _print_report(r)
    return r.status == verify.PASS


def cmd_table(args):
    ids = _parse_families(args.families)
    reports = verify.verify_table(ids, node_budget=args.budget)
    if args.format == "json":
        print(json.dumps([r.to_json_dict() for r in reports], indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(reports[0].to_json_dict()))
        writer.writeheader()
        for r in reports:
            writer.writerow(r.to_json_dict())
        print(buf.getvalue(), end="")
    else:
        for r in reports:
            _print_report(r)
    return all(r.status == verify.PASS for r in reports)


def cmd_circuits(args):
    system = rootsystems.parse_system_id(args.system)
    m = linmatroid.matroid_of(system)
    if args.max_order <= 3:
        circuits = linmatroid.circuits3(m)
    else:
        circuits = linmatroid.all_circuits_upto(m, args.max_order, node_budget=args.budget)
    if args.format == "json":
        print(json.dumps({
            "system": system.system_id,
            "order": args.max_order,
            "circuits": [list(c) for c in circuits],
        }))
    else:
        print(f"# {system.system_id}: {len(circuits)} circuits of order <= {args.max_order}")
        for c in circuits:
            print(" ".join(map(str, c)))
    return True


def cmd_aut(args):
    system = rootsystems.parse_system_id(args.system)
    m = linmatroid.matroid_of(system)
    c3 = linmatroid.circuits3(m)
    group = verify.aut_group_from_family(system, c3, args.budget)
    print(f"{system.system_id}: |Aut(G(X, C3))| = {group.order()}")
    if args.emit_generators:
        for g in group.generators:
            print(permgrp.cycle_notation(g))
    return True


def cmd_wreath(args):
    r = verify.verify_wreath(args.spec, node_budget=args.budget)
    _print_report(r)
    return r.status == verify.PASS


def cmd_crosscheck(args):
    r = verify.oracle_crosscheck(args.system, kmax=args.max_order, node_budget=args.budget)
    _print_report(r)
    return r.status == verify.PASS


COMMANDS = {
    "verify": cmd_verify,
    "table": cmd_table,
    "circuits": cmd_circuits,
    "aut": cmd_aut,
    "wreath": cmd_wreath,
    "crosscheck": cmd_crosscheck,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    ok = COMMANDS[args.command](args)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
