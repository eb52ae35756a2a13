"""Command-line front end: level listings, inequality systems, membership,
count tables, redundancy reports, numeric witnesses and the
recursion-vs-LR cross-check.

Exit codes: 0 success, 1 cross-check mismatch, 2 invalid options/input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cone, horn, lp, witness
from .subsets import group_into_orbits
from .horn import HornStore


class UsageError(Exception):
    pass


def _parse_sigma(text):
    if text is None:
        return None
    try:
        return tuple(sorted(int(x) for x in text.split(",")))
    except ValueError:
        raise UsageError(f"bad cycle type {text!r}; expected e.g. '3' or '1,1,1'")


def _store(args, s):
    return HornStore(arity=s, cache_dir=args.cache_dir,
                     use_cache=not args.no_cache)


def _emit(args, text):
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_subset(sub):
    return "{" + ",".join(str(j) for j in sub.elements) + "}"


def _fmt_tuple(tup):
    return " ".join(_fmt_subset(p) for p in tup.parts)


def cmd_tuples(args):
    sigma = _parse_sigma(args.sigma)
    if args.level not in ("all", "0", "00"):
        raise UsageError("tuples expects --level all, 0 or 00")
    if not (1 <= args.d <= args.r):
        raise UsageError("need 1 <= d <= r")
    store = _store(args, args.s)
    store.build_through(args.d, args.r, sigma)
    table = store.table(args.d, args.r, sigma)
    chosen = {
        "all": list(table.members),
        "0": table.zero_dim_members(),
        "00": table.point_members(),
    }[args.level]
    def diagonal(t):
        return all(p == t.parts[0] for p in t.parts)

    if args.orbits:
        listed = [
            (rep, len(members), diagonal(rep))
            for rep, members in group_into_orbits(chosen)
        ]
    else:
        listed = [(t, None, diagonal(t)) for t in chosen]
    if args.format == "json":
        rows = []
        for tup, size, stable in listed:
            row = {"tuple": tup.to_json(), "sigma_stable": stable}
            if size is not None:
                row["orbit_size"] = size
            rows.append(row)
        _emit(args, json.dumps(rows, indent=2) + "\n")
    elif args.format == "csv":
        head = "tuple,orbit_size,sigma_stable\n" if args.orbits else "tuple,sigma_stable\n"
        out = [head]
        for tup, size, stable in listed:
            cells = [json.dumps(tup.to_json()).replace(",", ";")]
            if args.orbits:
                cells.append(str(size))
            cells.append(str(stable).lower())
            out.append(",".join(cells) + "\n")
        _emit(args, "".join(out))
    else:
        lines = []
        for tup, size, stable in listed:
            extra = f"  x{size}" if size is not None else ""
            mark = " *" if stable else ""
            lines.append(f"{_fmt_tuple(tup)}{extra}{mark}")
        _emit(args, "\n".join(lines) + ("\n" if lines else ""))
    return 0


def cmd_system(args):
    sigma = _parse_sigma(args.sigma)
    if args.level not in ("full0", "min00", "all"):
        raise UsageError("system expects --level full0, min00 or all")
    system = cone.generate_system(args.r, args.s, sigma, args.level,
                                  _store(args, args.s))
    if args.format == "json":
        _emit(args, json.dumps(system.to_json(), indent=2) + "\n")
    elif args.format == "csv":
        _emit(args, system.to_csv())
    else:
        lines = [
            f"cone rank {args.r}, arity {args.s}, "
            f"sigma {sigma if sigma else 'none'}, level {args.level}",
            f"counts: total {system.count} = equality 2 + chamber "
            f"{system.chamber_count} + horn {len(system.horn)}",
        ]
        for con in system.constraints():
            lines.append(f"  [{con.index:>3}] {con.describe()}")
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _load_family(path):
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return cone.SpectrumFamily.from_json(data)


def cmd_member(args):
    family = _load_family(args.input)
    sigma = _parse_sigma(args.sigma)
    if args.level not in ("full0", "min00", "all"):
        raise UsageError("member expects --level full0, min00 or all")
    system = cone.generate_system(family.length, family.arity, sigma,
                                  args.level, _store(args, family.arity))
    verdict = system.decide(family)
    if args.format == "json":
        payload = {"member": verdict.is_member}
        if not verdict.is_member:
            payload["violated"] = verdict.violation.constraint.describe()
            payload["excess"] = str(verdict.violation.amount)
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        if verdict.is_member:
            _emit(args, "member\n")
        else:
            _emit(
                args,
                "not a member\nviolated: "
                f"{verdict.violation.constraint.describe()} "
                f"(excess {verdict.violation.amount})\n",
            )
    return 0


def cmd_tables(args):
    sigma = _parse_sigma(args.sigma)
    store = _store(args, args.s)
    rows = []
    for r in range(1, args.rmax + 1):
        full = cone.generate_system(r, args.s, sigma, "full0", store)
        reduced = cone.generate_system(r, args.s, sigma, "min00", store)
        rows.append((r, full.count, reduced.count))
    if sigma is None:
        headers = ("r", "l0", "l_min")
    else:
        headers = ("r", "l_sigma0", "l_sigma00")
    if args.format == "json":
        _emit(args, json.dumps(
            [dict(zip(headers, row)) for row in rows], indent=2) + "\n")
    elif args.format == "csv":
        out = [",".join(headers) + "\n"]
        out += [",".join(str(x) for x in row) + "\n" for row in rows]
        _emit(args, "".join(out))
    else:
        widths = [max(len(h), 6) for h in headers]
        fmt = "  ".join("{:>%d}" % w for w in widths)
        lines = [fmt.format(*headers)]
        lines += [fmt.format(*row) for row in rows]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_redundancy(args):
    sigma = _parse_sigma(args.sigma)
    if args.level not in ("full0", "min00", "all"):
        raise UsageError("redundancy expects --level full0, min00 or all")
    system = cone.generate_system(args.r, args.s, sigma, args.level,
                                  _store(args, args.s))
    if args.minimize:
        result = lp.minimize_system(system, fix_t_zero=args.slice_t)
        payload = {
            "retained": len(result.retained),
            "dropped": len(result.dropped),
            "rows": [
                {"index": v.index, "kind": v.kind, "verdict": v.verdict,
                 "optimum": str(v.optimum)}
                for v in result.verdicts
            ],
        }
    else:
        report = lp.redundancy_report(system, fix_t_zero=args.slice_t)
        payload = report.to_json()
    if args.format == "csv":
        out = ["index,kind,verdict,optimum\n"]
        for row in payload["rows"]:
            out.append(f"{row['index']},{row['kind']},{row['verdict']},"
                       f"{row['optimum']}\n")
        _emit(args, "".join(out))
    else:
        _emit(args, json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_witness(args):
    family = _load_family(args.input)
    log = open(args.residual_csv, "w", encoding="utf-8") if args.residual_csv else None
    try:
        result = witness.find_witness(
            family, max_iters=args.max_iters, tol=args.tol, seed=args.seed,
            restarts=args.restarts, residual_log=log,
        )
    finally:
        if log:
            log.close()
    _emit(args, result.to_json_str() + "\n")
    return 0


def cmd_crosscheck(args):
    store = _store(args, args.s)
    store.build_through(args.r, args.n)
    report = horn.cross_check(args.r, args.n, store)
    summary = {
        "size": args.r,
        "ambient": args.n,
        "tuples": report.total,
        "mismatches": len(report.mismatches),
    }
    _emit(args, json.dumps(summary, indent=2) + "\n")
    return 0 if report.clean else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="horncone",
        description="Horn inequalities and the eigenvalue cone of sums of "
                    "Hermitian matrices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--s", type=int, default=3)
        p.add_argument("--sigma", help="cycle type, e.g. '3' or '1,1,1'")
        p.add_argument("--format", choices=("table", "json", "csv"),
                       default="table")
        p.add_argument("--cache-dir")
        p.add_argument("--no-cache", action="store_true")
        p.add_argument("-o", "--output")

    p = sub.add_parser("tuples", help="list one level of intersecting tuples")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--level", default="00")
    p.add_argument("--orbits", action="store_true",
                   help="group into coordinate-permutation orbits")
    common(p)
    p.set_defaults(func=cmd_tuples)

    p = sub.add_parser("system", help="emit the inequality description")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--level", default="full0")
    common(p)
    p.set_defaults(func=cmd_system)

    p = sub.add_parser("member", help="decide membership of a spectrum family")
    p.add_argument("--input", required=True,
                   help="JSON file with spectra and t as p/q strings")
    p.add_argument("--level", default="full0")
    common(p)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("tables", help="inequality count table by rank")
    p.add_argument("--rmax", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("redundancy", help="LP redundancy report for a system")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--level", default="full0")
    p.add_argument("--slice-t", action="store_true",
                   help="fix t = 0 (integral-weight slice)")
    p.add_argument("--minimize", action="store_true",
                   help="greedy sequential reduction instead of "
                        "independent verdicts")
    common(p)
    p.set_defaults(func=cmd_redundancy)

    p = sub.add_parser("witness", help="numeric witness search")
    p.add_argument("--input", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--max-iters", type=int, default=5000)
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--residual-csv", help="per-iteration residual log")
    common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("crosscheck", help="recursion vs LR classification")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_crosscheck)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
