"""Command-line front end: ``linext <command> ...``.

Exit codes: 0 success, 1 input error, 2 budget error, 3 identity failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import analysis, engine, family, quad, survey
from .errors import BudgetError, IdentityFailure, InputError
from .poset import format_poset_text, load_poset, poset_to_json
from .quad import render_decimal

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_IDENTITY = 0, 1, 2, 3


def frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


class _Out:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def line(self, text: str = "") -> None:
        self.stream.write(text + "\n")

    def tsv(self, header: list[str], rows: list[list]) -> None:
        self.line("\t".join(header))
        for row in rows:
            self.line("\t".join(str(v) for v in row))

    def json(self, payload) -> None:
        self.line(json.dumps(payload, indent=2))

    def table(self, header: list[str], rows: list[list], payload=None) -> None:
        if self.fmt == "json":
            self.json(payload if payload is not None else [dict(zip(header, map(str, r))) for r in rows])
        elif self.fmt == "pretty":
            widths = [max(len(str(v)) for v in col) for col in zip(header, *rows)]
            for row in [header, *rows]:
                self.line("  ".join(str(v).rjust(w) for v, w in zip(row, widths)))
        else:
            self.tsv(header, rows)


def cmd_count(args, out: _Out) -> int:
    p = load_poset(args.poset)
    n = engine.count_extensions(p)
    if out.fmt == "json":
        out.json({"count": str(n)})
    else:
        out.line(str(n))
    return EXIT_OK


def cmd_prob(args, out: _Out) -> int:
    p = load_poset(args.poset)
    pr = engine.precedence_probability(p, args.x, args.y)
    dec = render_decimal(pr, args.digits)
    if out.fmt == "json":
        out.json({"x": args.x, "y": args.y, "probability": frac(pr), "decimal": dec})
    else:
        out.line(f"{frac(pr)}\t{dec}")
    return EXIT_OK


def cmd_balance(args, out: _Out) -> int:
    p = load_poset(args.poset)
    report = engine.balance_constant(p)
    witness = report.witness_labels(p)
    dec = render_decimal(report.delta, args.digits)
    if out.fmt == "json":
        out.json({
            "delta": frac(report.delta),
            "decimal": dec,
            "witness": list(witness) if witness else None,
            "extensions": str(report.total),
        })
    else:
        w = f"{witness[0]},{witness[1]}" if witness else "-"
        out.line(f"{frac(report.delta)}\t{dec}\t{w}")
    return EXIT_OK


def cmd_family(args, out: _Out) -> int:
    p = family.build_family(args.m, args.n)
    if args.emit:
        if out.fmt == "json":
            out.json(poset_to_json(p))
        else:
            out.stream.write(f"# P({args.m},{args.n})\n" + format_poset_text(p))
        return EXIT_OK
    count = engine.count_extensions(p)
    adm = family.is_admissible(args.m, args.n)
    out.table(
        ["m", "n", "elements", "covers", "extensions", "admissible"],
        [[args.m, args.n, p.size, len(p.covers), count, int(adm)]],
        payload={"m": args.m, "n": args.n, "elements": p.size, "covers": len(p.covers),
                 "extensions": str(count), "admissible": adm},
    )
    return EXIT_OK


def cmd_table(args, out: _Out) -> int:
    if args.max < 0:
        raise InputError("--max must be nonnegative")
    g = family.GridTable.build(args.max)
    if out.fmt == "pretty":
        span = range(args.max + 1)
        cells = {
            key: f"{v}*" if g.admissible_flags[key] else str(v) for key, v in g.values.items()
        }
        width = max(len(c) for c in cells.values()) if cells else 1
        out.line("m\\n " + " ".join(str(n).rjust(width) for n in span))
        for m in span:
            row = [cells.get((m, n), "").rjust(width) for n in span]
            out.line(f"{m:>3} " + " ".join(row))
        return EXIT_OK
    rows = [[m, n, g.values[m, n], int(g.admissible_flags[m, n])] for m, n in sorted(g.values)]
    out.table(
        ["m", "n", "E", "admissible"],
        rows,
        payload=[
            {"m": m, "n": n, "E": str(v), "admissible": bool(f)} for m, n, v, f in rows
        ],
    )
    return EXIT_OK


def cmd_closed_form(args, out: _Out) -> int:
    rows, failed = [], False
    for form in quad.CLOSED_FORMS:
        m, n = form.shape(args.k)
        if args.k < form.min_k():
            rows.append([form.equation, form.name(), m, n, "-", "-", "out-of-range"])
            continue
        value = quad.closed_form(form, args.k)
        g = family.grid_count(m, n)
        ok = value == g
        failed |= not ok
        rows.append([form.equation, form.name(), m, n, value, g, "OK" if ok else "MISMATCH"])
    header = ["equation", "form", "m", "n", "closed_form", "grid", "status"]
    out.table(header, rows)
    return EXIT_IDENTITY if failed else EXIT_OK


def cmd_converge(args, out: _Out) -> int:
    rows = analysis.delta_sequence(args.kmax, digits=args.digits)
    data = [
        [r.k, frac(r.delta_exact), r.delta_decimal, r.gap_decimal,
         ",".join(r.witness) if r.witness else "-"]
        for r in rows
    ]
    out.table(
        ["k", "delta_exact", "delta_decimal", "gap_decimal", "witness"],
        data,
        payload=[
            {"k": r.k, "delta_exact": frac(r.delta_exact), "delta_decimal": r.delta_decimal,
             "gap_exact": r.gap.exact(), "gap_decimal": r.gap_decimal,
             "witness": list(r.witness) if r.witness else None}
            for r in rows
        ],
    )
    return EXIT_OK


def cmd_decompose(args, out: _Out) -> int:
    dec = analysis.case_decomposition(args.k, args.t)
    direct = analysis.case_counts_direct(args.k, args.t) if args.check else None
    limits = analysis.asymptotic_case_probabilities()
    names = [
        f"b{5 * args.t + lo} < a{5 * args.t + 1} < b{5 * args.t + hi}"
        for lo, hi in analysis.CASE_WINDOWS
    ]
    rows = []
    for i, (name, count, pr) in enumerate(zip(names, dec.counts, dec.probabilities)):
        rows.append([
            i + 1, name, count, direct[i] if direct else "-", frac(pr),
            render_decimal(pr, args.digits), limits[i].to_decimal(args.digits),
        ])
    header = ["case", "window", "count", "direct", "probability", "decimal", "limit"]
    out.table(
        header,
        rows,
        payload={
            "k": dec.k, "t": dec.t, "total": str(dec.total),
            "cases": [
                {"window": r[1], "count": str(r[2]),
                 "direct": str(r[3]) if direct else None,
                 "probability": r[4], "limit_exact": limits[i].exact()}
                for i, r in enumerate(rows)
            ],
        },
    )
    bad = sum(dec.counts) != dec.total or (direct is not None and tuple(direct) != dec.counts)
    if bad:
        print("case counts do not partition E(5k, 5k)", file=sys.stderr)
        return EXIT_IDENTITY
    return EXIT_OK


def cmd_survey(args, out: _Out) -> int:
    report = survey.survey_small_posets(args.n)
    out.json(report.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linext", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("tsv", "json", "pretty"), default="tsv")
    parser.add_argument("--digits", type=int, default=12, help="decimal places for derived columns")
    # same options after the subcommand; SUPPRESS keeps the top-level value otherwise
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json", "pretty"), default=argparse.SUPPRESS)
    common.add_argument("--digits", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="number of linear extensions")
    p.add_argument("poset")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("prob", parents=[common], help="probability that x precedes y")
    p.add_argument("poset")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("balance", parents=[common], help="balance constant and witness pair")
    p.add_argument("poset")
    p.set_defaults(func=cmd_balance)

    p = sub.add_parser("family", parents=[common], help="build P(m, n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit", action="store_true", help="print the poset instead of a summary")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("table", parents=[common], help="E(m, n) grid with admissibility")
    p.add_argument("--max", type=int, default=15)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("closed-form", parents=[common], help="closed forms against the grid")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("converge", parents=[common], help="balance constants of P(5k, 5k)")
    p.add_argument("--kmax", type=int, required=True)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("decompose", parents=[common], help="three-case split of P(5k, 5k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--no-check", dest="check", action="store_false",
                   help="skip recounting the augmented posets")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("survey", parents=[common], help="all posets on at most N elements")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_survey)
    return parser


def run(argv: list[str] | None = None, stdout=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    out = _Out(args.format, stdout)
    try:
        return args.func(args, out)
    except (InputError, OSError, ValueError) as exc:
        print(f"linext: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetError as exc:
        print(f"linext: budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except IdentityFailure as exc:
        print(f"linext: identity failure: {exc}", file=sys.stderr)
        return EXIT_IDENTITY


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
