"""Command-line front end: ``wreathind {decompose,table,verify,patterns}``.

Results go to standard output (JSON by default), diagnostics to standard
error.  Exit codes: 0 success, 1 error, 2 ambiguous recursion.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .characters import decompose_class_function
from .levels import (
    CACHE_ENV,
    DEFAULT_SOLUTION_CAP,
    clear_memory_cache,
    decompose,
    mult_of_pattern,
    verify_section4,
)
from .errors import AmbiguousRecursion, WreathIndError
from .matching import verify_iso
from .objects import (
    DEFAULT_ENUM_CAP,
    DEFAULT_ORACLE_CAP,
    Family,
    permutation_character_enum,
    permutation_character_wreath,
)
from .partitions import PartitionPattern, format_partition

EXIT_OK, EXIT_ERROR, EXIT_AMBIGUOUS = 0, 1, 2


def parse_range(text: str) -> list[int]:
    """``"5"`` -> [5], ``"2..5"`` -> [2, 3, 4, 5]."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if lo > hi:
            raise argparse.ArgumentTypeError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _range_arg(text):
    try:
        return parse_range(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--cache-dir", default=os.environ.get(CACHE_ENV),
                        help=f"directory for cached levels (default: ${CACHE_ENV})")
    common.add_argument("--no-cache", action="store_true", help="ignore and do not write cached levels")
    common.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    common.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    common.add_argument("--solution-cap", type=int, default=DEFAULT_SOLUTION_CAP)
    common.add_argument("--jobs", type=int, default=1)

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--family", choices=("C", "D"), default="C")
    family.add_argument("--m", type=int, default=3)

    parser = argparse.ArgumentParser(prog="wreathind", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common, family], help="decompose one level")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("recursion", "oracle", "closed-form"), default="recursion")

    p = sub.add_parser("table", parents=[common, family], help="decompose a range of levels")
    p.add_argument("--n", type=_range_arg, required=True, help="level or range A..B")
    p.add_argument("--method", choices=("recursion", "oracle", "closed-form"), default="recursion")

    p = sub.add_parser("verify", parents=[common, family], help="run a verification suite")
    p.add_argument("--suite", choices=("section4", "iso", "oracle-agreement"), required=True)
    p.add_argument("--n", type=int, default=4, help="level for the iso suite")
    p.add_argument("--n-max", type=int, default=None)

    p = sub.add_parser("patterns", parents=[common, family], help="pattern multiplicity sweep")
    p.add_argument("--n", type=_range_arg, required=True)
    p.add_argument("--patterns", required=True, help="comma-separated patterns, e.g. 0,2,42,51")
    p.add_argument("--level", choices=("full", "minus"), default="full")
    return parser


def _kwargs(args) -> dict:
    return {
        "solution_cap": args.solution_cap,
        "oracle_cap": args.oracle_cap,
        "cache_dir": None if args.no_cache else args.cache_dir,
    }


def _emit(obj):
    print(json.dumps(obj, indent=2))


def _tsv_rows(vec) -> list[str]:
    return [f"{format_partition(k)}\t{v}" for k, v in vec.items()]


def cmd_decompose(args) -> int:
    fam = Family(args.family, args.m, args.n)
    code = EXIT_OK
    try:
        res = decompose(fam, args.n, args.method, **_kwargs(args))
    except AmbiguousRecursion as exc:
        res, code = exc.result, EXIT_AMBIGUOUS
        print(f"warning: {exc}", file=sys.stderr)
    if args.format == "tsv":
        print("\n".join(_tsv_rows(res.multiplicities)))
    else:
        _emit(res.to_json())
    return code


def _level_row(fam: Family, n: int, args) -> tuple[dict, bool]:
    res = decompose(fam, n, args.method, strict=False, **_kwargs(args))
    row = res.to_json()
    row["multiplicity_free"] = res.multiplicities.is_multiplicity_free()
    row["dimension"] = res.multiplicities.total_dimension()
    if args.method == "recursion":
        try:
            oracle = decompose(fam, n, "oracle", **_kwargs(args))
            row["oracle_agrees"] = oracle.multiplicities == res.multiplicities
        except WreathIndError as exc:
            row["oracle_agrees"] = None
            print(f"note: level {n} not cross-checked: {exc}", file=sys.stderr)
    return row, res.uniqueness == "ambiguous"


def cmd_table(args) -> int:
    fam = Family(args.family, args.m, args.n[0])
    rows, ambiguous, first = [], False, None
    for n in args.n:
        row, amb = _level_row(fam, n, args)
        ambiguous |= amb
        if first is None and not row["multiplicity_free"]:
            first = n
        row["first_with_multiplicity"] = first == n
        rows.append(row)
    if args.format == "tsv":
        for row in rows:
            parts = [format_partition(d["partition"]) for d in row["multiplicities"]
                     for _ in range(d["mult"])]
            flag = "*" if row["first_with_multiplicity"] else ""
            print(f"{row['n']}\t{row['m']}\t{' '.join('[' + p + ']' for p in parts)}\t{flag}")
    else:
        _emit({"family": args.family, "m": args.m, "first_level_with_multiplicity": first, "levels": rows})
    bad = any(r.get("oracle_agrees") is False for r in rows)
    if bad:
        print("error: recursion and oracle disagree", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_AMBIGUOUS if ambiguous else EXIT_OK


def _agreement(job) -> dict:
    kind, m, n, enum_cap, oracle_cap = job
    fam = Family(kind, m, n)
    enum = decompose_class_function(permutation_character_enum(fam, enum_cap))
    wreath = permutation_character_wreath(fam, oracle_cap)
    return {"check": "oracle_agreement", "family": kind, "m": m, "n": n,
            "passed": enum == wreath, "detail": f"{len(wreath)} components"}


def cmd_verify(args) -> int:
    kw = _kwargs(args)
    if args.suite == "section4":
        report = [c.to_json() for c in verify_section4(args.n_max or 7, **kw)]
    elif args.suite == "iso":
        report = [c.to_json() for c in verify_iso(args.n)]
    else:
        jobs = [(args.family, args.m, n, args.enum_cap, args.oracle_cap)
                for n in range(1, (args.n_max or 3) + 1)]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                report = list(pool.map(_agreement, jobs))
        else:
            report = [_agreement(j) for j in jobs]
    ok = all(entry["passed"] for entry in report)
    if args.format == "tsv":
        for entry in report:
            label = "PASS" if entry["passed"] else "FAIL"
            where = entry.get("n", entry.get("shape"))
            print(f"{label}\t{entry['check']}\t{where}\t{entry.get('detail', '')}")
    else:
        _emit({"suite": args.suite, "passed": ok, "checks": report})
    return EXIT_OK if ok else EXIT_ERROR


def cmd_patterns(args) -> int:
    fam = Family(args.family, args.m, args.n[0])
    patterns = [PartitionPattern.parse(p) for p in args.patterns.split(",")]
    table = []
    for n in args.n:
        row = {str(p): mult_of_pattern(fam, p, n, args.level, **_kwargs(args)) for p in patterns}
        table.append({"n": n, "level": args.level, "mult": row})
    if args.format == "tsv":
        print("n\t" + "\t".join(str(p) for p in patterns))
        for entry in table:
            print(f"{entry['n']}\t" + "\t".join(str(v) for v in entry["mult"].values()))
    else:
        _emit({"family": args.family, "m": args.m, "patterns": table})
    return EXIT_OK


COMMANDS = {"decompose": cmd_decompose, "table": cmd_table, "verify": cmd_verify,
            "patterns": cmd_patterns}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.m < 2:
        parser.error("--m must be at least 2")
    method = getattr(args, "method", None)
    if method == "closed-form" and (args.m != 2 or args.family != "C"):
        parser.error("--method closed-form requires --family C --m 2")
    if args.command == "verify" and args.suite == "section4" and (args.n_max or 7) < 5:
        parser.error("--n-max must be at least 5 for the section4 suite")
    if args.no_cache:
        clear_memory_cache()
    try:
        return COMMANDS[args.command](args)
    except (WreathIndError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
