"""Command-line front end.

Exit codes: 0 success, 1 runtime failure (64-bit overflow), 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from dataclasses import dataclass, field

from hvec.conditions import Condition, PositivePart, h_sequence, h_sequence_row
from hvec.enumeration import count_L, count_Lk, enumerate_L, tau_recursive
from hvec.fibbound import build_B, check_containment, fib
from hvec.staircase import (
    Partition,
    distinct_partitions,
    hilbert_from_staircase,
    is_lex,
    minimal_generators,
    partition_to_staircase,
    render_staircase,
)

CONDITION_COLUMNS = ("wlp", "unimodal", "symmetric")
SCALAR_COLUMNS = ("ell", "fib", "tau", "distinct_parts", "distinct_parts_all")


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    n: int
    columns: dict[str, int] = field(default_factory=dict)

    def as_dict(self) -> dict[str, int]:
        return {"n": self.n, **self.columns}


def _column_is_known(name: str) -> bool:
    if name in CONDITION_COLUMNS or name in SCALAR_COLUMNS:
        return True
    return name.startswith("l") and name[1:].isdigit() and int(name[1:]) >= 1


def parse_columns(text: str) -> list[str]:
    names = [c.strip() for c in text.split(",") if c.strip()]
    if not names:
        raise UsageError("no columns requested")
    for name in names:
        if not _column_is_known(name):
            raise UsageError(f"unknown column {name!r}")
    return names


def table_rows(max_n: int, columns: list[str]) -> list[OutputRecord]:
    per_vector = [c for c in columns if c in CONDITION_COLUMNS]
    conditions = [Condition.parse(c) for c in per_vector]
    rows = []
    for n in range(1, max_n + 1):
        values = {}
        if conditions:
            values.update(zip(per_vector, h_sequence_row(conditions, n)))
        for name in columns:
            if name in values:
                continue
            if name == "ell":
                values[name] = count_L(n)
            elif name == "fib":
                values[name] = fib(n)
            elif name == "tau":
                values[name] = tau_recursive(n)
            elif name == "distinct_parts":
                values[name] = len(distinct_partitions(n, 2))
            elif name == "distinct_parts_all":
                values[name] = len(distinct_partitions(n, 1))
            else:
                values[name] = count_Lk(n, int(name[1:]))
        rows.append(OutputRecord(n, {name: values[name] for name in columns}))
    return rows


def format_csv(rows: list[OutputRecord], columns: list[str]) -> str:
    lines = [",".join(["n", *columns])]
    for row in rows:
        lines.append(",".join(str(v) for v in [row.n, *(row.columns[c] for c in columns)]))
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> list[OutputRecord]:
    lines = text.strip("\n").split("\n")
    header = lines[0].split(",")
    if header[0] != "n":
        raise ValueError("table CSV must start with an n column")
    rows = []
    for line in lines[1:]:
        values = [int(v) for v in line.split(",")]
        rows.append(OutputRecord(values[0], dict(zip(header[1:], values[1:]))))
    return rows


def format_vector(v, compact: bool) -> str:
    return "".join(map(str, v)) if compact else ",".join(map(str, v))


def format_monomial(a: int, b: int) -> str:
    factors = []
    for var, e in (("x", a), ("y", b)):
        if e == 1:
            factors.append(var)
        elif e > 1:
            factors.append(f"{var}^{e}")
    return "*".join(factors) or "1"


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def cmd_count(args, out):
    if args.condition is None:
        out.write(f"{count_L(args.length)}\n")
        return 0
    condition = Condition.parse(args.condition, PositivePart(args.variant))
    out.write(f"{h_sequence(condition, args.length)}\n")
    return 0


def cmd_enumerate(args, out):
    vectors = [list(v) for v in enumerate_L(args.length).vectors]
    if args.format == "json":
        out.write(json.dumps(vectors) + "\n")
        return 0
    compact = all(e <= 9 for v in vectors for e in v)
    for v in vectors:
        out.write(format_vector(v, compact) + "\n")
    return 0


def cmd_table(args, out):
    columns = parse_columns(args.columns)
    rows = table_rows(args.max_n, columns)
    if args.format == "json":
        out.write(json.dumps([r.as_dict() for r in rows]) + "\n")
    else:
        out.write(format_csv(rows, columns))
    return 0


def cmd_bounds(args, out):
    all_pass = True
    for n in range(1, args.max_n + 1):
        lower = len(distinct_partitions(n, 2))
        ell = count_L(n)
        upper = fib(n)
        holds, witnesses = check_containment(n)
        ok = lower <= ell <= upper and holds and len(build_B(n)) == upper
        all_pass &= ok
        line = f"n={n}: {lower} <= {ell} <= {upper} {'PASS' if ok else 'FAIL'} deficit={upper - ell}"
        if witnesses:
            shown = " ".join("(" + ",".join(map(str, w)) + ")" for w in witnesses[:3])
            line += f" witnesses={shown}"
        out.write(line + "\n")
    return 0 if all_pass else 1


def cmd_partition(args, out):
    parts = args.parts
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise UsageError(f"parts must be weakly decreasing, got {' '.join(map(str, parts))}")
    s = partition_to_staircase(Partition(parts))
    if args.action == "to-ideal":
        out.write(", ".join(format_monomial(a, b) for a, b in minimal_generators(s)) + "\n")
    elif args.action == "hilbert":
        out.write(",".join(map(str, hilbert_from_staircase(s))) + "\n")
    elif args.action == "render":
        out.write(render_staircase(s))
    else:
        out.write(("true" if is_lex(s) else "false") + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hvec", description="Count and enumerate h-vectors by length.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of h-vectors of a given length")
    p.add_argument("--length", type=_positive, required=True)
    p.add_argument("--condition", help="all, unimodal, symmetric, wlp, or l<k> for h_1 = k")
    p.add_argument("--variant", choices=[v.value for v in PositivePart], default="truncate",
                   help="positive-part reading used by the wlp condition")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list the h-vectors of a given length")
    p.add_argument("--length", type=_positive, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="h-sequences for n = 1..max-n")
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--columns", default="ell,wlp,unimodal,symmetric,l2,l3,l4,l5")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bounds", help="check partition <= ell <= Fibonacci and L(n) in B(n)")
    p.add_argument("--max-n", type=_positive, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("partition", help="two-variable staircase tools")
    p.add_argument("parts", nargs="+", type=_positive)
    p.add_argument("--action", choices=["to-ideal", "hilbert", "render", "is-lex"], required=True)
    p.set_defaults(func=cmd_partition)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "count" and args.condition is not None:
            try:
                Condition.parse(args.condition)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        return args.func(args, out)
    except UsageError as exc:
        err.write(parser.format_usage())
        err.write(f"hvec {args.command}: error: {exc}\n")
        return 2
    except OverflowError as exc:
        err.write(f"hvec {args.command}: overflow: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
