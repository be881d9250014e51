"""Command-line front end.

Subcommands: hooks, decompose, core, cores-count, table, verify, no-check.
Exit codes: 0 on success (all checks verified), 1 when a verification sweep
finds a counterexample, 2 on usage errors. Output is deterministic for fixed
arguments; --format selects text, json, or csv where applicable.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import cores, distribution, nekrasov
from .abacus import decompose, t_core
from .partitions import Partition, count_t_hooks, hook_multiset, hook_rows

DEFAULT_TABLE_ROWS = (300, 600, 900, 4500, 4800, 5100)


class UsageError(Exception):
    pass


def _parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "-"):
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
        return Partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_hooks(args) -> int:
    lam = args.partition
    rows = hook_rows(lam)
    ts = args.t or []
    if args.format == "json":
        payload = {
            "partition": list(lam),
            "hook_rows": rows,
            "hook_lengths": sorted(hook_multiset(lam).elements()),
            "t_hook_counts": {str(t): count_t_hooks(lam, t) for t in ts},
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    lines = [" ".join(map(str, row)) for row in rows]
    lines.append(
        "hook lengths: " + " ".join(map(str, sorted(hook_multiset(lam).elements())))
    )
    for t in ts:
        lines.append(f"h_{t} = {count_t_hooks(lam, t)}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _decompose_payload(lam: Partition, t: int) -> dict:
    cq = decompose(lam, t)
    return {
        "partition": list(lam),
        "t": t,
        "core": list(cq.core),
        "quotient": [list(comp) for comp in cq.quotient],
        "size": lam.size,
        "core_size": cq.core.size,
        "quotient_size": cq.quotient_size,
        "identity": f"{lam.size} = {cq.core.size} + {t}*{cq.quotient_size}",
    }


def cmd_decompose(args) -> int:
    payload = _decompose_payload(args.partition, args.t)
    if args.format == "text":
        lines = [
            f"partition: {','.join(map(str, payload['partition'])) or '-'}",
            f"core:      {','.join(map(str, payload['core'])) or '-'}",
        ]
        for c, comp in enumerate(payload["quotient"]):
            lines.append(f"quotient[{c}]: {','.join(map(str, comp)) or '-'}")
        ok = payload["size"] == payload["core_size"] + args.t * payload["quotient_size"]
        lines.append(payload["identity"] + (" OK" if ok else " MISMATCH"))
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def cmd_core(args) -> int:
    core = t_core(args.partition, args.t)
    if args.format == "json":
        _emit(json.dumps({"t": args.t, "core": list(core)}) + "\n", args.out)
    else:
        _emit((",".join(map(str, core)) or "-") + "\n", args.out)
    return 0


def cmd_cores_count(args) -> int:
    cc = cores.count_t_cores(args.n, args.t, witnesses=args.witnesses)
    if args.format == "json":
        payload = {"n": cc.n, "t": cc.t, "count": cc.count}
        if cc.witnesses is not None:
            payload["witnesses"] = [list(w) for w in cc.witnesses]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    lines = [f"c_{cc.t}({cc.n}) = {cc.count}"]
    if cc.witnesses is not None:
        lines += ["  " + (",".join(map(str, w)) or "-") for w in cc.witnesses]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_table(args) -> int:
    rows = args.n if args.n is not None else DEFAULT_TABLE_ROWS
    if args.a is not None and not 0 <= args.a < args.b:
        raise UsageError(f"--a must lie in 0..{args.b - 1}")
    residues = range(args.b) if args.a is None else (args.a,)
    profiles = [distribution.residue_profile(args.t, args.b, n) for n in rows]
    if args.format == "json":
        payload = [
            {
                "n": prof.n,
                "total": str(prof.total),
                "counts": [str(prof.counts[a]) for a in residues],
                "proportions": [prof.formatted_proportions()[a] for a in residues],
            }
            for prof in profiles
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    if args.format == "text":
        lines = [f"t={args.t} b={args.b}"]
        for prof in profiles:
            props = prof.formatted_proportions()
            lines.append(f"n={prof.n}: " + " ".join(props[a] for a in residues))
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    lines = ["n,a,count,proportion"]
    for prof in profiles:
        props = prof.formatted_proportions()
        for a in residues:
            lines.append(f"{prof.n},{a},{prof.counts[a]},{props[a]}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _report_single(kind: str, ell: int, verdict, lines: list[str]) -> int:
    lines.append(f"{kind} ell={ell}: {verdict.status}" + (
        f" at n={verdict.counterexample}" if verdict.counterexample is not None else ""
    ))
    if verdict.status == distribution.VERIFIED:
        lines.append(f"  {verdict.checked} values of n checked, all zero")
    elif verdict.note:
        lines.append(f"  {verdict.note}")
    return 0 if verdict.ok else 1


def _report_sweep(report, lines: list[str]) -> int:
    lines.append(
        f"{report.kind} vanishing, ell={report.ell}, residues mod {report.modulus}, "
        f"n <= {report.n_max}:"
    )
    for a1, a2, v in report.cells:
        if v.status == distribution.HYPOTHESIS_NOT_MET:
            continue
        suffix = (
            f"counterexample at n={v.counterexample}"
            if v.status == distribution.COUNTEREXAMPLE
            else f"verified ({v.checked} values)"
        )
        lines.append(f"  a1={a1} a2={a2}: {suffix}")
    lines.append(
        f"  {report.hypothesis_cells} hypothesis cells, "
        f"{report.values_checked} values checked, "
        f"{len(report.counterexamples)} counterexamples"
    )
    return 0 if report.ok else 1


def _verify_part1(args, lines: list[str]) -> int:
    if (args.a1 is None) != (args.a2 is None):
        raise UsageError("--a1 and --a2 must be given together")
    if args.a1 is not None:
        verdict = distribution.verify_2hook_vanishing(args.ell, args.a1, args.a2, args.nmax)
        return _report_single("2-hook vanishing", args.ell, verdict, lines)
    report = distribution.sweep_2hook_vanishing(args.ell, args.nmax, threads=args.threads)
    return _report_sweep(report, lines)


def _verify_part2(args, lines: list[str]) -> int:
    if (args.a1 is None) != (args.a2 is None):
        raise UsageError("--a1 and --a2 must be given together")
    if args.a1 is not None:
        verdict = distribution.verify_3hook_vanishing(args.ell, args.a1, args.a2, args.nmax)
        return _report_single("3-hook vanishing", args.ell, verdict, lines)
    report = distribution.sweep_3hook_vanishing(args.ell, args.nmax, threads=args.threads)
    return _report_sweep(report, lines)


def _verify_no_identity(args, lines: list[str]) -> int:
    report = nekrasov.check_identity(args.mmax, guard=max(nekrasov.DEFAULT_GUARD, args.mmax))
    if report.ok:
        lines.append(f"hook-length identity verified for all q-degrees <= {report.m_max}")
        return 0
    for m, k in report.mismatches:
        lines.append(f"MISMATCH at q-degree {m}, z-degree {k}")
    return 1


def _verify_core_formulas(args, lines: list[str]) -> int:
    report = cores.verify_core_formulas(
        n_max=args.nmax, series_n_max=args.series_nmax, t_max=args.tmax
    )
    lines.append(
        f"core-count agreement: n <= {report.n_max} for the t=2,3 formulas, "
        f"n <= {report.series_n_max} for t <= {report.t_max} series ({report.checked} checks)"
    )
    for failure in report.failures:
        lines.append("MISMATCH " + failure)
    return 0 if report.ok else 1


def cmd_verify(args) -> int:
    lines: list[str] = []
    if args.nmax is None:
        args.nmax = 500 if args.target == "core-formulas" else 2000
    if args.target == "part1":
        code = _verify_part1(args, lines)
    elif args.target == "part2":
        code = _verify_part2(args, lines)
    elif args.target == "no-identity":
        code = _verify_no_identity(args, lines)
    else:
        code = _verify_core_formulas(args, lines)
    lines.append("VERIFIED" if code == 0 else "COUNTEREXAMPLE FOUND")
    _emit("\n".join(lines) + "\n", args.out)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tcores",
        description="Exact hook-count statistics for integer partitions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", default=None, help="write output to a file")

    p = sub.add_parser("hooks", help="hook lengths of a partition")
    p.add_argument("partition", type=_parse_partition, help="comma-separated parts, '' for the empty partition")
    p.add_argument("--t", action="append", type=int, help="also report the t-hook count (repeatable)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    add_common(p)
    p.set_defaults(func=cmd_hooks)

    p = sub.add_parser("decompose", help="t-core and t-quotient of a partition")
    p.add_argument("partition", type=_parse_partition)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="json")
    add_common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("core", help="t-core of a partition")
    p.add_argument("partition", type=_parse_partition)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    add_common(p)
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("cores-count", help="number of t-cores of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--witnesses", action="store_true", help="list the t-cores too")
    p.add_argument("--format", choices=("text", "json"), default="text")
    add_common(p)
    p.set_defaults(func=cmd_cores_count)

    p = sub.add_parser("table", help="residue-class counts of t-hook numbers")
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--b", type=int, default=3)
    p.add_argument("--a", type=int, default=None, help="emit a single residue class")
    p.add_argument(
        "--n",
        type=_parse_int_list,
        default=None,
        help=f"comma-separated sizes (default {','.join(map(str, DEFAULT_TABLE_ROWS))})",
    )
    p.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    add_common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument(
        "target", choices=("part1", "part2", "no-identity", "core-formulas")
    )
    p.add_argument("--ell", type=int, default=5)
    p.add_argument("--a1", type=int, default=None)
    p.add_argument("--a2", type=int, default=None)
    p.add_argument(
        "--nmax",
        type=int,
        default=None,
        help="default 2000 (part1/part2) or 500 (core-formulas)",
    )
    p.add_argument("--mmax", type=int, default=nekrasov.DEFAULT_GUARD)
    p.add_argument("--series-nmax", type=int, default=200, dest="series_nmax")
    p.add_argument("--tmax", type=int, default=7)
    p.add_argument("--threads", type=int, default=1)
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("no-check", help="shorthand for 'verify no-identity'")
    p.add_argument("--mmax", type=int, default=nekrasov.DEFAULT_GUARD)
    add_common(p)
    p.set_defaults(func=cmd_verify, target="no-identity", nmax=None)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
