"""``distinctseq`` command line: table, verify, run, simulate.

Input formats for ``run``::

    sequence   n: v1 v2 ... vn
    matrix     n
               a11 a12 ... a1n
               ...
               an1 an2 ... ann

Inline arguments may use ``;`` in place of newlines (``"2; 1 2; 2 1"``).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import __version__
from . import analytics as an
from .algorithms import ALGORITHMS, InvalidInputError
from .analytics.numeric import render
from .oracle import DEFAULT_BUDGET
from .simulation import ALGORITHM_NAMES, SimulationConfig, simulate
from .tables import build_table, render_table
from .verify import run_checks

SEED_ENV = "DISTINCTSEQ_SEED"
EXIT_GOOD, EXIT_BAD, EXIT_MALFORMED = 0, 1, 2


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(line: str):
    """``(column, token)`` pairs, columns 1-based."""
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        yield col + 1, tok
        col += len(tok)


def _int(tok: str, lineno: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, col, f"expected an integer, found {tok!r}") from None


def _lines(text: str) -> list[str]:
    return text.replace(";", "\n").splitlines()


def parse_sequence(text: str) -> list[int]:
    """Parse ``n: v1 ... vn``; values are range-checked against ``n``."""
    lines = [(i, ln) for i, ln in enumerate(_lines(text), 1) if ln.strip()]
    if not lines:
        raise ParseError(1, 1, "empty input")
    if len(lines) > 1:
        raise ParseError(lines[1][0], 1, "a sequence takes exactly one line")
    lineno, line = lines[0]
    head, sep, rest = line.partition(":")
    if not sep:
        raise ParseError(lineno, 1, "expected 'n: v1 ... vn'")
    start = len(head) - len(head.lstrip()) + 1
    n = _int(head.strip(), lineno, start)
    if n < 1:
        raise ParseError(lineno, start, f"n must be positive, got {n}")
    offset = len(head) + 1
    values = []
    for col, tok in _tokens(rest):
        v = _int(tok, lineno, offset + col)
        if not 1 <= v <= n:
            raise ParseError(lineno, offset + col, f"value {v} outside [1, {n}]")
        values.append(v)
    if len(values) != n:
        raise ParseError(lineno, len(line) + 1, f"expected {n} values, found {len(values)}")
    return values


def parse_matrix(text: str) -> list[list[int]]:
    """Parse a first line ``n`` followed by ``n`` rows of ``n`` integers."""
    lines = [(i, ln) for i, ln in enumerate(_lines(text), 1) if ln.strip()]
    if not lines:
        raise ParseError(1, 1, "empty input")
    lineno, first = lines[0]
    toks = list(_tokens(first))
    if len(toks) != 1:
        raise ParseError(lineno, toks[1][0] if len(toks) > 1 else 1,
                         "first line must hold n alone")
    n = _int(toks[0][1], lineno, toks[0][0])
    if n < 1:
        raise ParseError(lineno, toks[0][0], f"n must be positive, got {n}")
    body = lines[1:]
    if len(body) != n:
        at = body[n][0] if len(body) > n else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(at, 1, f"expected {n} rows, found {len(body)}")
    rows = []
    for lineno, line in body:
        row = []
        for col, tok in _tokens(line):
            v = _int(tok, lineno, col)
            if not 1 <= v <= n:
                raise ParseError(lineno, col, f"value {v} outside [1, {n}]")
            row.append(v)
        if len(row) != n:
            raise ParseError(lineno, len(line) + 1, f"expected {n} values, found {len(row)}")
        rows.append(row)
    return rows


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or not raw.strip():
        return 0
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _exact(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    return render(x, 12)


# -- subcommands ---------------------------------------------------------

def cmd_table(args) -> int:
    lo = args.n if args.n is not None else 1
    hi = args.n_max if args.n_max is not None else max(lo, 10)
    if lo < 1 or hi < lo:
        print(f"error: invalid n range {lo}..{hi}", file=sys.stderr)
        return 2
    table = build_table(args.table_id, range(lo, hi + 1))
    sys.stdout.write(render_table(table, args.format))
    return 0


def cmd_verify(args) -> int:
    results = run_checks(args.level, args.budget)
    for r in results:
        print(r.line())
    failed = sum(not r.ok for r in results)
    print(f"{len(results)} checks, {failed} failed")
    return 1 if failed else 0


def cmd_run(args) -> int:
    if args.file is not None:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_MALFORMED
    elif args.input is None or args.input == "-":
        text = sys.stdin.read()
    else:
        text = args.input
    try:
        data = parse_matrix(text) if args.alg == "matrix" else parse_sequence(text)
        out = ALGORITHMS[args.alg](data)
    except (ParseError, InvalidInputError) as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    stop = out.stop_index
    report = {
        "algorithm": args.alg,
        "n": len(data),
        "good": out.good,
        "comparisons": out.comparisons,
        "assignments": out.assignments,
        "total": out.total_ops,
        "stop_index": list(stop) if isinstance(stop, tuple) else stop,
    }
    print(json.dumps(report))
    return EXIT_GOOD if out.good else EXIT_BAD


def _prediction(alg: str, n: int):
    try:
        rep = an.expected_cost_report(n, alg)
    except ValueError as exc:
        return None, str(exc)

    def fmt(v):
        if isinstance(v, an.Interval):
            return {"lower": _exact(v.lower), "upper": _exact(v.upper)}
        return _exact(v)
    return {"comparisons": fmt(rep.expected_comparisons),
            "assignments": fmt(rep.expected_assignments),
            "total": fmt(rep.expected_time)}, None


def cmd_simulate(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    try:
        cfg = SimulationConfig(args.n, args.alg, args.trials, seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    res = simulate(cfg, workers=args.workers)
    pred, why = _prediction(args.alg, args.n)
    if why:
        print(f"note: no analytic prediction ({why})", file=sys.stderr)
    rows = []
    for kind in ("comparisons", "assignments", "total"):
        est = getattr(res, kind)
        p = pred[kind] if pred else None
        rows.append({
            "quantity": kind,
            "mean": f"{est.mean:.6f}",
            "standard_error": f"{est.standard_error:.6f}",
            "sample_variance": f"{est.sample_variance:.6f}",
            "predicted": p,
        })
    head = {"algorithm": cfg.algorithm, "n": cfg.n, "trials": cfg.trials, "seed": cfg.seed,
            "good_fraction": f"{res.comparisons.good_fraction:.6f}"}
    if args.format == "json":
        print(json.dumps({**head, "estimates": rows}, indent=2))
        return 0
    buf = io.StringIO()
    if args.format == "csv":
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(head) + ["quantity", "mean", "standard_error", "sample_variance",
                                 "predicted"])
        for r in rows:
            w.writerow(list(head.values()) + [r["quantity"], r["mean"], r["standard_error"],
                                              r["sample_variance"], _flat(r["predicted"])])
    else:
        buf.write(" ".join(f"{k}={v}" for k, v in head.items()) + "\n\n")
        buf.write("| quantity | mean | SE | predicted |\n|---|---|---|---|\n")
        for r in rows:
            buf.write(f"| {r['quantity']} | {r['mean']} | {r['standard_error']} | "
                      f"{_flat(r['predicted'])} |\n")
    sys.stdout.write(buf.getvalue())
    return 0


def _flat(p) -> str:
    if p is None:
        return "n/a"
    if isinstance(p, dict):
        return f"[{p['lower']}, {p['upper']}]"
    return p


# -- parser ---------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="distinctseq",
                                description="Permutation testers and their expected costs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="print Table 1-5")
    t.add_argument("table_id", type=int, choices=(1, 2, 3, 4, 5))
    t.add_argument("--n", type=int, help="first n (default 1)")
    t.add_argument("--n-max", type=int, help="last n (default 10)")
    t.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="check identities against the oracle")
    v.add_argument("--level", choices=("fast", "full"), default="fast")
    v.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET,
                   help="max enumerated inputs per oracle call")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("run", help="run one tester on one input")
    r.add_argument("--alg", choices=tuple(ALGORITHMS), required=True)
    r.add_argument("input", nargs="?", help="inline input, or '-' for stdin")
    r.add_argument("--file", help="read the input from a file")
    r.set_defaults(func=cmd_run)

    s = sub.add_parser("simulate", help="Monte Carlo estimate of expected costs")
    s.add_argument("--alg", choices=ALGORITHM_NAMES, required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--trials", type=_positive, default=100_000)
    s.add_argument("--seed", type=int, help=f"default: ${SEED_ENV} or 0")
    s.add_argument("--workers", type=_positive, default=1)
    s.add_argument("--format", choices=("markdown", "csv", "json"), default="json")
    s.set_defaults(func=cmd_simulate)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
