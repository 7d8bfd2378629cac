"""Command line front end.

Exit codes: 0 success (code minimal / no mismatches), 1 code not minimal or
sweep mismatches, 2 bad input, 3 budget exceeded, 4 inconclusive or the
deciders disagree.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from pathlib import Path

from hiercode.code import BudgetExceeded, DefiningSet, format_generator_matrix, weight_distribution
from hiercode.gf2 import DimensionError
from hiercode.harness import KINDS, reproduce_proof_witnesses, sweep
from hiercode.minimality import Method, Result, code_is_minimal
from hiercode.poset import FamilyError, HierarchicalPoset, d0_bits, defining_sets, parse_family
from hiercode.randomized import monotone, random_full_rank_set, random_nested_pair, verdicts_agree

EXIT_OK, EXIT_NOT_MINIMAL, EXIT_USAGE, EXIT_BUDGET, EXIT_UNDECIDED = 0, 1, 2, 3, 4

CHECKERS = {
    "geometric": (Method.GEOMETRIC,),
    "bruteforce": (Method.DEFINITIONAL,),
    "ab": (Method.ASHIKHMIN_BARG,),
    "both": (Method.GEOMETRIC, Method.DEFINITIONAL),
    "all": (Method.GEOMETRIC, Method.DEFINITIONAL, Method.ASHIKHMIN_BARG),
}


class UsageError(Exception):
    pass


def _int_range(text: str) -> range:
    try:
        lo, _, hi = text.partition("-")
        lo = int(lo)
        hi = int(hi) if hi else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or N-M, got {text!r}") from None
    return range(lo, hi + 1)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load(args) -> tuple[DefiningSet, dict]:
    """The defining set selected by --set, plus descriptive fields."""
    if args.set == "custom-file":
        if not args.file:
            raise UsageError("--set custom-file needs --file PATH")
        try:
            D = DefiningSet.from_strings(Path(args.file).read_text().splitlines())
        except (OSError, ValueError) as exc:
            raise UsageError(str(exc)) from None
        return D, {"set": "custom-file", "n": D.k}
    if args.m is None or args.l is None:
        raise UsageError("--m and --l are required unless --set custom-file")
    try:
        poset = HierarchicalPoset(args.m, args.l)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    info = {"set": args.set, "m": args.m, "l": args.l, "n": poset.n}
    if args.set == "d0":
        cols = d0_bits(poset)
        info.update(ideals=None, size_D0=len(cols))
        return DefiningSet(poset.n, tuple(cols)), info
    if not args.ideals:
        raise UsageError("--ideals is required for --set d")
    try:
        family = parse_family(poset, args.ideals)
    except FamilyError as exc:
        raise UsageError(str(exc)) from None
    bundle = defining_sets(family)
    info.update(ideals=family.labels(), size_D0=len(bundle.D0), size_D1=len(bundle.D1))
    return DefiningSet(poset.n, bundle.D), info


def _kv_csv(record: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])
    for key, value in record.items():
        writer.writerow([key, value if isinstance(value, (str, int)) else json.dumps(value)])
    return buf.getvalue()


def _kv_text(record: dict) -> str:
    lines = []
    for key, value in record.items():
        if isinstance(value, list) and value and isinstance(value[0], str):
            lines.append(f"{key}:")
            lines.extend(f"  {row}" for row in value)
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _render(record, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, indent=1) + "\n"
    if fmt == "csv":
        return _kv_csv(record)
    return _kv_text(record)


def cmd_construct(args) -> int:
    D, info = _load(args)
    wd = weight_distribution(D, args.max_k)
    record = dict(info)
    record["size_D"] = len(D)
    record["rank"] = D.rank
    record["generator_matrix"] = format_generator_matrix(D).splitlines()
    record["weight_distribution"] = {str(w): c for w, c in wd.counts.items()}
    record["w_min"] = wd.w_min
    record["w_max"] = wd.w_max
    _emit(_render(record, args.format), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    D, info = _load(args)
    results = []
    for method in CHECKERS[args.checker]:
        v = code_is_minimal(D, method, args.max_k)
        results.append({
            "method": method.value,
            "result": v.result.value,
            "witness_u": str(v.witness[0]) if v.witness else None,
            "witness_v": str(v.witness[1]) if v.witness else None,
            "checked": v.checked,
        })
    decided = {r["result"] for r in results if r["result"] != Result.INCONCLUSIVE.value}
    if len(decided) != 1:
        code = EXIT_UNDECIDED
    elif decided == {Result.MINIMAL.value}:
        code = EXIT_OK
    else:
        code = EXIT_NOT_MINIMAL
    record = dict(info, verdicts=results)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(results[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(results)
        text = buf.getvalue()
    elif args.format == "text":
        lines = []
        for r in results:
            line = f"{r['method']}: {r['result']}"
            if r["witness_u"]:
                line += f" (u={r['witness_u']}, v={r['witness_v']})"
            lines.append(line)
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(record, indent=1) + "\n"
    _emit(text, args.out)
    return code


def cmd_sweep(args) -> int:
    kinds = tuple(k.strip() for k in args.kinds.split(","))
    bad = [k for k in kinds if k not in KINDS]
    if bad:
        raise UsageError(f"unknown set kinds {bad}; choose from {KINDS}")
    report = sweep(args.m_range, args.l_range, args.t_max, kinds, CHECKERS[args.checker],
                   max_n=args.max_n, max_k=args.max_k, timings=args.timings,
                   workers=args.workers, t_min=args.t_min)
    if args.format == "csv":
        text = report.to_csv()
    elif args.format == "text":
        bad_rows = report.mismatches
        text = f"instances: {len(report.instances)}\nmismatches: {len(bad_rows)}\n"
        for row in bad_rows:
            text += f"  {row.m} {row.l} {row.ideals} {row.kind} {row.case} {row.verdicts}\n"
    else:
        text = report.to_json()
    _emit(text, args.out)
    return EXIT_OK if not report.mismatches else EXIT_NOT_MINIMAL


def cmd_witness(args) -> int:
    checks = reproduce_proof_witnesses()
    if args.format == "text":
        text = "".join(f"{c.label}: u={c.u} v={c.v} {'ok' if c.passed else 'FAILED'}\n" for c in checks)
    else:
        rows = [{"label": c.label, "m": c.m, "l": c.l, "ideals": c.ideals, "kind": c.kind,
                 "u": c.u, "v": c.v, "checks": c.checks, "passed": c.passed} for c in checks]
        text = json.dumps(rows, indent=1, ensure_ascii=False) + "\n"
    _emit(text, args.out)
    return EXIT_OK if all(c.passed for c in checks) else EXIT_NOT_MINIMAL


def cmd_random_check(args) -> int:
    rng = random.Random(args.seed)
    disagreements = violations = 0
    for _ in range(args.count):
        if not verdicts_agree(random_full_rank_set(rng, rng.randint(1, args.max_dim))):
            disagreements += 1
    for _ in range(args.count):
        M, N = random_nested_pair(rng, rng.randint(1, min(args.max_dim, 6)))
        if not monotone(M, N):
            violations += 1
    record = {"seed": args.seed, "count": args.count,
              "oracle_disagreements": disagreements, "monotonicity_violations": violations}
    _emit(_render(record, args.format), args.out)
    return EXIT_OK if not disagreements and not violations else EXIT_NOT_MINIMAL


def _add_code_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, help="size of the lower level")
    p.add_argument("--l", type=int, help="size of the upper level")
    p.add_argument("--ideals", help='family, e.g. "3;3,4" (labels in m+1..n)')
    p.add_argument("--set", choices=("d", "d0", "custom-file"), default="d")
    p.add_argument("--file", help="defining set file for --set custom-file")
    p.add_argument("--max-k", type=int, default=None, help="dimension budget override")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hiercode",
        description="Minimal binary codes from order ideals of two-level hierarchical posets.")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = dict(choices=("json", "csv", "text"), default="json")

    p = sub.add_parser("construct", help="build a code and print its parameters")
    _add_code_args(p)
    p.add_argument("--format", **fmt)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="decide whether a code is minimal")
    _add_code_args(p)
    p.add_argument("--checker", choices=tuple(CHECKERS), default="both")
    p.add_argument("--format", **fmt)
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="compare predicted and computed minimality")
    p.add_argument("--m-range", type=_int_range, default=range(1, 6))
    p.add_argument("--l-range", type=_int_range, default=range(1, 6))
    p.add_argument("--t-max", type=int, default=3)
    p.add_argument("--t-min", type=int, default=1)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--kinds", default="D,D0")
    p.add_argument("--checker", choices=tuple(CHECKERS), default="all")
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="record micros (output no longer reproducible)")
    p.add_argument("--format", **fmt)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("witness", help="validate the explicit non-minimality witnesses")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("random-check", help="randomized oracle and monotonicity checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-dim", type=int, default=8)
    p.add_argument("--format", **fmt)
    p.add_argument("--out")
    p.set_defaults(func=cmd_random_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, FamilyError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
