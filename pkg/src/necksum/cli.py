"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__, verify
from .bijection import cycle_word, psi, psi_inverse_detail
from .errors import DomainError
from .identities import table_diff_grid, table_diff_sum
from .perms import Permutation, count_cvp, enumerate_cvp
from .qary import binary_slice_mismatches, scan_equality
from .subsets import (
    ResidueSubset,
    Universe,
    affine_bijection,
    count_s_short,
    count_sbar,
    enumerate_subsets,
)
from .words import (
    count_coperiod_div,
    count_lplus,
    count_lyndon,
    count_lyndon_total,
    count_necklaces,
    count_necklaces_total,
    enumerate_coperiod_div,
    enumerate_lplus,
    enumerate_lyndon,
    enumerate_necklaces,
)

FAMILIES = ("necklaces", "lyndon", "coperiod", "lplus", "sbar", "s", "cvp")
MAX_LISTED = 20


class UsageError(Exception):
    pass


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.family} needs {', '.join(missing)}")


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# count / enumerate

def _count(args) -> int:
    fam, n, k, r = args.family, args.n, args.k, args.r
    if fam == "necklaces":
        return count_necklaces_total(n) if k is None else count_necklaces(n, k)
    if fam == "lyndon":
        return count_lyndon_total(n) if k is None else count_lyndon(n, k)
    if fam in ("coperiod", "sbar", "s"):
        _need(args, "k", "r")
        fn = {"coperiod": count_coperiod_div, "sbar": count_sbar, "s": count_s_short}[fam]
        return fn(n, k, r)
    _need(args, "k")
    return count_lplus(n, k) if fam == "lplus" else count_cvp(n, k)


def cmd_count(args) -> int:
    value = _count(args)
    if args.format == "csv":
        out = _csv(["family", "n", "k", "r", "count"],
                   [[args.family, args.n, "" if args.k is None else args.k,
                     "" if args.r is None else args.r, value]])
    elif args.format == "json":
        out = _json({"family": args.family, "n": args.n, "k": args.k, "r": args.r, "count": value})
    else:
        out = f"{value}\n"
    sys.stdout.write(out)
    return 0


def _items(args) -> list:
    fam, n, k, r = args.family, args.n, args.k, args.r
    _need(args, "k")
    if fam == "necklaces":
        return enumerate_necklaces(n, k)
    if fam == "lyndon":
        return enumerate_lyndon(n, k)
    if fam == "lplus":
        return enumerate_lplus(n, k)
    if fam == "cvp":
        return enumerate_cvp(n, k)
    _need(args, "r")
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    r %= n
    if fam == "coperiod":
        return enumerate_coperiod_div(n, k, r)
    universe = Universe.FULL if fam == "sbar" else Universe.SHORT
    return enumerate_subsets(n, k, r, universe)


def _subset_values(s: ResidueSubset, zero_based: bool) -> list[int]:
    if zero_based:
        return sorted(a % s.modulus for a in s.elements)
    return list(s.elements)


def cmd_enumerate(args) -> int:
    items = _items(args)
    zb = args.zero_based
    if args.format == "csv":
        rows = []
        for it in items:
            if isinstance(it, ResidueSubset):
                rows.append([" ".join(map(str, _subset_values(it, zb)))])
            else:
                rows.append([str(it)])
        out = _csv(["item"], rows)
    elif args.format == "json":
        listed = [_subset_values(it, zb) if isinstance(it, ResidueSubset) else str(it) for it in items]
        out = _json({"family": args.family, "n": args.n, "k": args.k, "r": args.r,
                     "count": len(items), "items": listed})
    else:
        lines = [it.render(zb) if isinstance(it, ResidueSubset) else str(it) for it in items]
        lines.append(f"count: {len(items)}")
        out = "\n".join(lines) + "\n"
    sys.stdout.write(out)
    return 0


# bijection

def _parse_set(text: str, n: int, zero_based: bool) -> ResidueSubset:
    text = text.strip().strip("{}")
    values = [int(t) for t in text.replace(" ", ",").split(",") if t]
    if zero_based:
        if any(not 0 <= v < n for v in values):
            raise ValueError(f"elements must lie in 0..{n - 1}")
        values = [v or n for v in values]
    return ResidueSubset.of(n, values)


def cmd_bijection(args) -> int:
    fmt = args.format
    if args.direction == "psi":
        p = Permutation.from_str(args.perm)
        image = psi(p, args.k, args.start)
        cyc = p.cycle_from(args.start)
        cw = cycle_word(p, args.k, args.start)
        if fmt == "json":
            out = _json({"perm": str(p), "k": args.k, "cycle": list(cyc),
                         "cycle_word": str(cw), "image": str(image)})
        elif fmt == "csv":
            out = _csv(["perm", "k", "cycle_word", "image"], [[str(p), args.k, str(cw), image]])
        else:
            lines = [str(image)]
            if args.steps:
                lines.append("cycle: (" + ",".join(map(str, cyc)) + ")")
                lines.append(f"cycle word: {cw}")
            out = "\n".join(lines) + "\n"
    elif args.direction == "psi-inverse":
        perm, rows = psi_inverse_detail(args.word, args.n, args.k)
        if fmt == "json":
            out = _json({"word": args.word, "n": args.n, "k": args.k, "perm": str(perm),
                         "cycle": [row.rank for row in rows],
                         "shifts": [{"j": row.index, "shift": str(row.shifted),
                                     "partial_sum": str(row.partial_sum), "rank": row.rank}
                                    for row in rows]})
        elif fmt == "csv":
            if args.steps:
                out = _csv(["j", "shift", "partial_sum", "rank"],
                           [[row.index, row.shifted, row.partial_sum, row.rank] for row in rows])
            else:
                out = _csv(["word", "n", "k", "perm"], [[args.word, args.n, args.k, str(perm)]])
        else:
            lines = [str(perm)]
            if args.steps:
                lines.append("cycle: (" + ",".join(str(row.rank) for row in rows) + ")")
                width = len(rows)
                lines.append(f"{'j':>3}  {'shift':<{width}}  {'s(shift)':<{max(width, 8)}}  rank")
                for row in rows:
                    lines.append(f"{row.index:>3}  {str(row.shifted):<{width}}  "
                                 f"{str(row.partial_sum):<{max(width, 8)}}  {row.rank}")
            out = "\n".join(lines) + "\n"
    else:
        zb = args.zero_based
        src = _parse_set(args.set, args.n, zb)
        dst = affine_bijection(src, args.y, args.z)
        if fmt == "json":
            out = _json({"n": args.n, "y": args.y, "z": args.z,
                         "subset": _subset_values(src, zb), "image": _subset_values(dst, zb),
                         "residue": [src.residue, dst.residue]})
        elif fmt == "csv":
            out = _csv(["subset", "image"], [[" ".join(map(str, _subset_values(src, zb))),
                                              " ".join(map(str, _subset_values(dst, zb)))]])
        else:
            out = dst.render(zb) + "\n"
    sys.stdout.write(out)
    return 0


# table

def cmd_table(args) -> int:
    if args.which == "diff-grid":
        rows = table_diff_grid(args.r, args.max_m, args.jobs)
        key, width = "m", args.max_m + 1
    else:
        rows = table_diff_sum(args.max_n, args.jobs)
        key, width = "n", args.max_n + 1
    if args.format == "csv":
        out = _csv(None, [vals + [""] * (width - len(vals)) for vals in rows])
    elif args.format == "json":
        out = _json({"rows": [{key: i, "values": vals} for i, vals in enumerate(rows, 1)]})
    else:
        cell = max(len(str(v)) for vals in rows for v in vals)
        label = len(str(len(rows)))
        out = "".join(f"{i:>{label}} | " + " ".join(f"{v:>{cell}}" for v in vals).rstrip() + "\n"
                      for i, vals in enumerate(rows, 1))
    sys.stdout.write(out)
    return 0


# verify

def cmd_verify(args) -> int:
    if args.max_n < 1:
        raise ValueError(f"--max-n must be >= 1, got {args.max_n}")
    reports = verify.run(args.suite, args.max_n, args.deep)
    ok = all(rep.ok for rep in reports)
    if args.format == "json":
        out = _json({"ok": ok, "max_n": args.max_n, "deep": args.deep,
                     "suites": [{"name": rep.name, "checked": rep.checked,
                                 "violations": len(rep.violations),
                                 "first_violations": rep.violations[:MAX_LISTED]}
                                for rep in reports]})
    elif args.format == "csv":
        out = _csv(["suite", "checked", "violations", "status"],
                   [[rep.name, rep.checked, len(rep.violations), "pass" if rep.ok else "fail"]
                    for rep in reports])
    else:
        lines = []
        for rep in reports:
            status = "PASS" if rep.ok else "FAIL"
            lines.append(f"{status} {rep.name}: {rep.checked} checks, {len(rep.violations)} violations")
            lines.extend(f"  {v}" for v in rep.violations[:MAX_LISTED])
            if len(rep.violations) > MAX_LISTED:
                lines.append(f"  ... {len(rep.violations) - MAX_LISTED} more")
        out = "\n".join(lines) + "\n"
    sys.stdout.write(out)
    return 0 if ok else 1


# scan-qary

def cmd_scan_qary(args) -> int:
    result = scan_equality(args.max_n, args.max_q, args.max_k, args.jobs)
    if args.format == "json":
        out = _json({"rows": [{"n": row.n, "q": row.q, "k": row.k, "r": row.r,
                               "count_multisets": row.count_multisets,
                               "count_necklaces": row.count_necklaces,
                               "equal": row.equal, "conditions": row.conditions}
                              for row in result.rows],
                     "counterexamples": len(result.counterexamples),
                     "binary_mismatches": len(binary_slice_mismatches(result))})
    else:
        out = result.to_csv()
    sys.stdout.write(out)
    for row in result.counterexamples:
        print(f"unequal r=0 cell with gcd(q,n)=1: n={row.n} q={row.q} k={row.k} "
              f"multisets={row.count_multisets} necklaces={row.count_necklaces}", file=sys.stderr)
    return 0


def _common() -> argparse.ArgumentParser:
    # SUPPRESS keeps subcommand copies from clobbering values given before the subcommand
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("plain", "csv", "json"), default=argparse.SUPPRESS)
    p.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes for grids")
    p.add_argument("--zero-based", action="store_true", default=argparse.SUPPRESS,
                   help="render subsets of Z_n as {0..n-1}")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="necksum", parents=[common],
                                     description="Subset sums modulo n, binary necklaces and cyclic V-shaped permutations.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (("count", "print a count"), ("enumerate", "list the objects")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("family", choices=FAMILIES)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int)
        p.add_argument("--r", type=int)

    p = sub.add_parser("bijection", parents=[common], help="apply Psi, its inverse, or the affine map")
    bsub = p.add_subparsers(dest="direction", required=True)
    b = bsub.add_parser("psi", parents=[common])
    b.add_argument("--perm", required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--start", type=int, default=1, help="element the cycle is read from")
    b.add_argument("--steps", action="store_true", help="show the cycle and cycle word")
    b = bsub.add_parser("psi-inverse", parents=[common])
    b.add_argument("--word", required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--steps", "--table", action="store_true", help="show the ranked shift table")
    b = bsub.add_parser("affine", parents=[common])
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--set", required=True, help="comma-separated elements, e.g. 3,5,6")
    b.add_argument("--y", type=int, required=True)
    b.add_argument("--z", type=int, required=True)

    p = sub.add_parser("table", parents=[common], help="difference tables")
    tsub = p.add_subparsers(dest="which", required=True)
    t = tsub.add_parser("diff-grid", parents=[common])
    t.add_argument("--r", type=int, default=2)
    t.add_argument("--max-m", type=int, default=19)
    t = tsub.add_parser("diff-sum", parents=[common])
    t.add_argument("--max-n", type=int, default=20)

    p = sub.add_parser("verify", parents=[common], help="exhaustive identity checks")
    p.add_argument("suite", choices=("all",) + verify.SUITES)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--deep", action="store_true", help="also compare against enumeration")

    p = sub.add_parser("scan-qary", parents=[common], help="q-ary evidence table (CSV)")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--max-q", type=int, default=4)
    p.add_argument("--max-k", type=int)
    return parser


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "bijection": cmd_bijection,
    "table": cmd_table,
    "verify": cmd_verify,
    "scan-qary": cmd_scan_qary,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.format = getattr(args, "format", "plain")
    args.jobs = getattr(args, "jobs", 1)
    args.zero_based = getattr(args, "zero_based", False)
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        return COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (UsageError, ValueError) as exc:
        print(f"necksum {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
