"""Command-line front end: bound tables, verification suites, conjecture runs.

Reports stream as newline-delimited JSON or CSV with a fixed header.  Row
order is fully determined by the requested ranges, so payloads are
byte-identical across reruns and across worker counts; the jobs flag only
changes wall time.

Exit codes: 0 success (conjecture violations are findings, not failures),
1 a proven fact failed to verify (implementation bug), 2 usage error,
3 enumeration budget exceeded without an override.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from math import comb

from .bounds import check_upper_bound, verify_term_identities
from .errors import (
    BudgetExceededError,
    ColoringCapError,
    DomainError,
    InternalInconsistencyError,
)
from .oracle import (
    CENSUS,
    PARTITION_SUBGRAPH,
    chi_count,
    chromatic_census,
    count_partition_subgraphs,
    evaluate_conjecture,
)
from .partitions import enumerate_partitions, exponent

TABLE_FIELDS = [
    "v", "n", "y", "log2_total", "best_partition", "e_star", "lambda",
    "relation", "corollary",
]
CENSUS_FIELDS = ["v", "chi", "count"]
CONJECTURE_FIELDS = [
    "conjecture", "v", "n", "interpretation", "lhs", "rhs", "holds", "witness",
]

_INTERPRETATIONS = {
    "partition": [PARTITION_SUBGRAPH],
    "census": [CENSUS],
    "both": [PARTITION_SUBGRAPH, CENSUS],
}


def table_rows(min_v: int, max_v: int, n_filter: int | None = None) -> list[dict]:
    return [
        check_upper_bound(v, n).to_json_dict()
        for v in range(min_v, max_v + 1)
        for n in range(1, v + 1)
        if n_filter is None or n == n_filter
    ]


def census_rows(
    min_v: int, max_v: int, jobs: int = 1, override: bool = False
) -> list[dict]:
    return [
        chromatic_census(v, jobs=jobs, override=override).to_json_dict()
        for v in range(min_v, max_v + 1)
    ]


def conjecture_rows(
    min_v: int,
    max_v: int,
    interpretations: list[str],
    n_filter: int | None = None,
    jobs: int = 1,
    override: bool = False,
) -> list[dict]:
    """Verdict rows ordered by (v, n, conjecture, interpretation).

    The exact-chi count for each (v, n, interpretation) is computed once and
    shared between conjectures 1 and 3; a census is computed once per v.
    """
    rows: list[dict] = []
    census_cache: dict[int, dict[int, int]] = {}
    for v in range(min_v, max_v + 1):
        for n in range(2, v + 1):
            if n_filter is not None and n != n_filter:
                continue
            chi_values = {}
            for interp in interpretations:
                if interp == CENSUS:
                    if v not in census_cache:
                        census_cache[v] = chromatic_census(
                            v, jobs=jobs, override=override
                        ).counts
                    chi_values[interp] = (census_cache[v].get(n, 0), None)
                else:
                    chi_values[interp] = chi_count(
                        v, n, interp, jobs=jobs, override=override
                    )
            for which in (1, 2, 3):
                if which == 2:
                    rows.append(evaluate_conjecture(2, v, n).to_json_dict())
                    continue
                for interp in interpretations:
                    verdict = evaluate_conjecture(
                        which, v, n, interp, chi_value=chi_values[interp]
                    )
                    rows.append(verdict.to_json_dict())
    return rows


def flatten_census_rows(rows: list[dict]) -> list[dict]:
    """One (v, chi, count) record per census entry, for the CSV rendering."""
    return [
        {"v": row["v"], "chi": int(chi), "count": count}
        for row in rows
        for chi, count in sorted(row["counts"].items(), key=lambda kv: int(kv[0]))
    ]


def render_ndjson(rows: list[dict]) -> str:
    return "".join(json.dumps(row, separators=(",", ":")) + "\n" for row in rows)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_csv(rows: list[dict], fields: list[str]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([_csv_cell(row.get(field)) for field in fields])
    return buffer.getvalue()


def verify_theorem(max_v: int) -> str:
    pairs = 0
    for v in range(1, max_v + 1):
        for n in range(1, v + 1):
            check_upper_bound(v, n)
            pairs += 1
    return f"theorem: {pairs} (v, n) pairs checked up to v={max_v}; bound and equality case hold"


def verify_proof_terms(max_v: int) -> str:
    partitions = 0
    comparisons = 0
    for v in range(1, max_v + 1):
        for n in range(1, v + 1):
            for p in enumerate_partitions(v, n):
                comparisons += verify_term_identities(p)
                partitions += 1
    return (
        f"proof-terms: {partitions} partitions checked up to v={max_v}, "
        f"{comparisons} comparisons; all identities hold"
    )


def verify_eq1(max_v: int, max_exponent: int) -> str:
    partitions = 0
    graphs = 0
    for v in range(1, max_v + 1):
        for n in range(1, v + 1):
            for p in enumerate_partitions(v, n):
                e = exponent(p).exponent
                if e > max_exponent:
                    continue
                counted = count_partition_subgraphs(p)
                if counted != 1 << e:
                    raise InternalInconsistencyError(
                        f"enumeration of {p} counted {counted}, closed form says {1 << e}"
                    )
                partitions += 1
                graphs += counted
    return (
        f"eq1: {partitions} partitions checked (v <= {max_v}, exponent <= "
        f"{max_exponent}), {graphs} subgraphs enumerated; counts match 2^exponent"
    )


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text}")
    return value


def _add_range_flags(sub: argparse.ArgumentParser, default_min: int, default_max: int) -> None:
    sub.add_argument("--min-v", type=_positive, default=default_min,
                     help=f"smallest vertex count (default {default_min})")
    sub.add_argument("--max-v", type=_positive, default=default_max,
                     help=f"largest vertex count (default {default_max})")


def _add_output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=["json", "csv"], default="json",
                     help="json = newline-delimited objects, csv = fixed header")
    sub.add_argument("--out", default=None, metavar="PATH",
                     help="write the report here instead of standard output")


def _add_work_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--jobs", type=_positive, default=os.cpu_count() or 1,
                     help="worker processes for enumeration (default: CPU count)")
    sub.add_argument("--budget-override", action="store_true",
                     help="run even if the search space exceeds the safety budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromacount",
        description="Exact counts and verification for color-partition-compatible graphs.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    table = commands.add_parser("table", help="bound report per (v, n)")
    _add_range_flags(table, 1, 12)
    table.add_argument("--n", type=_positive, default=None, help="restrict to one class count")
    _add_work_flags(table)  # accepted everywhere; table work is symbolic, so inert here
    _add_output_flags(table)
    table.set_defaults(handler=cmd_table)

    verify = commands.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=["theorem", "proof-terms", "eq1"])
    verify.add_argument("--max-v", type=_positive, default=None,
                        help="largest vertex count (default 12; 8 for eq1)")
    verify.add_argument("--max-exponent", type=_positive, default=16,
                        help="eq1 only: skip partitions with a larger exponent")
    verify.set_defaults(handler=cmd_verify)

    conjectures = commands.add_parser("conjectures", help="conjecture verdicts per (v, n)")
    _add_range_flags(conjectures, 2, 7)
    conjectures.add_argument("--n", type=_positive, default=None,
                             help="restrict to one class count")
    conjectures.add_argument("--interpretation", choices=["partition", "census", "both"],
                             default="partition",
                             help="exact-chi counting mode (default partition)")
    _add_work_flags(conjectures)
    _add_output_flags(conjectures)
    conjectures.set_defaults(handler=cmd_conjectures)

    census = commands.add_parser("census", help="full chromatic census per v")
    _add_range_flags(census, 1, 6)
    _add_work_flags(census)
    _add_output_flags(census)
    census.set_defaults(handler=cmd_census)

    return parser


def _check_range(args) -> None:
    if args.min_v > args.max_v:
        raise DomainError(f"--min-v {args.min_v} exceeds --max-v {args.max_v}")


def cmd_table(args) -> int:
    _check_range(args)
    rows = table_rows(args.min_v, args.max_v, args.n)
    if args.format == "json":
        _emit(render_ndjson(rows), args.out)
    else:
        _emit(render_csv(rows, TABLE_FIELDS), args.out)
    return 0


def cmd_verify(args) -> int:
    if args.suite == "theorem":
        summary = verify_theorem(args.max_v or 12)
    elif args.suite == "proof-terms":
        summary = verify_proof_terms(args.max_v or 12)
    else:
        summary = verify_eq1(args.max_v or 8, args.max_exponent)
    print(summary)
    return 0


def cmd_conjectures(args) -> int:
    _check_range(args)
    rows = conjecture_rows(
        args.min_v,
        args.max_v,
        _INTERPRETATIONS[args.interpretation],
        n_filter=args.n,
        jobs=args.jobs,
        override=args.budget_override,
    )
    if args.format == "json":
        _emit(render_ndjson(rows), args.out)
    else:
        _emit(render_csv(rows, CONJECTURE_FIELDS), args.out)
    return 0


def cmd_census(args) -> int:
    _check_range(args)
    rows = census_rows(args.min_v, args.max_v, jobs=args.jobs, override=args.budget_override)
    if args.format == "json":
        _emit(render_ndjson(rows), args.out)
    else:
        _emit(render_csv(flatten_census_rows(rows), CENSUS_FIELDS), args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except ColoringCapError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return 3
    except InternalInconsistencyError as exc:
        print(f"proven fact failed to verify (implementation bug): {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
