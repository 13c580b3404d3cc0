"""Command-line front end: ``hookspecht analyze|matrix|verify|table``.

Exit status is 0 on success, 1 when a verification check fails, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from collections import Counter
from dataclasses import dataclass

from .combinatorics import HookShape, enumerate_domino
from .endomorphism import analyze, decide, matrix_of_f
from .klr_engine import SpechtModule, parse_generator
from .fields import Field
from .hook_actions import HookActions
from .oracle import DEFAULT_CAP, verify_presentation, verify_domino_identities, verify_endomorphism

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
TABLE_COLUMNS = ("a", "b", "n", "char", "decomposable", "rule")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    a: int | None = None
    b: int | None = None
    char: int = 0
    format: str = "text"
    cap: int = DEFAULT_CAP
    out: str | None = None
    trace: bool = False

    def __post_init__(self):
        try:
            Field(self.char)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if self.a is not None and self.a < 1:
            raise UsageError("--a must be at least 1")
        if self.b is not None and self.b < 0:
            raise UsageError("--b must be non-negative")


def parse_range(text: str) -> range:
    """``"3..9"`` (inclusive) or a single integer; ``"5..3"`` is empty."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer range: {text!r}") from None
    return range(v, v + 1)


def parse_chars(text: str) -> list[int]:
    try:
        chars = [int(c) for c in text.split(",") if c.strip()]
        for c in chars:
            Field(c)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return chars


def _eig_out(x, char):
    return int(x) if char else (int(x) if getattr(x, "denominator", 1) == 1 else str(x))


# -- commands --------------------------------------------------------------------


def _trace_summary(shape: HookShape, char: int) -> dict:
    """Run every fast-path generator on the domino basis with tracing on; count rule uses."""
    ha = HookActions(shape, Field(char), trace=True)
    S = ha.engine
    for t in enumerate_domino(shape):
        for g in S.generators():
            ha.apply(g, t)
    return {"rules": dict(sorted(Counter(e["rule"] for e in ha.events).items())), "fallbacks": ha.fallbacks}


def cmd_analyze(cfg: CliConfig) -> tuple[int, object]:
    rep = analyze(cfg.a, cfg.b, cfg.char)
    rep["eigenvalues"] = [_eig_out(x, rep["char"]) for x in rep["eigenvalues"]]
    shape = HookShape(cfg.a, cfg.b)
    if cfg.trace and shape.b % 2 == 0 and shape.n % 2 == 1:
        rep["trace"] = _trace_summary(shape, cfg.char)
    return EXIT_OK, rep


def _analyze_text(rep: dict) -> str:
    a, b = rep["shape"]
    lines = [
        f"shape        ({a},1^{b})",
        f"n            {rep['n']}",
        f"char         {rep['char']}",
        f"dim          {rep['dim']}",
        f"dominoes     {rep['domino_count']}",
        f"verdict      {'decomposable' if rep['decomposable'] else 'indecomposable'} ({rep['rule']})",
    ]
    if rep["eigenvalues"]:
        lines.append("eigenvalues  " + ", ".join(map(str, rep["eigenvalues"])))
        lines.append("eigenspaces  " + ", ".join(map(str, rep["eigenspace_dims"])))
    if "trace" in rep:
        lines.append("trace        " + ", ".join(f"{k}:{v}" for k, v in rep["trace"]["rules"].items()))
        lines.append(f"fallbacks    {rep['trace']['fallbacks']}")
    return "\n".join(lines)


def cmd_matrix(cfg: CliConfig, gen: str):
    shape = HookShape(cfg.a, cfg.b)
    S = SpechtModule(shape, cfg.char)
    if gen == "f":
        try:
            M = matrix_of_f(shape, cfg.char, S).full
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        try:
            g = parse_generator(gen, shape)
            M = S.action_matrix(g)
        except ValueError as exc:
            raise UsageError(f"unknown generator {gen!r}: {exc}") from None
    return EXIT_OK, M


def _matrix_text(M) -> str:
    legend = "\n".join(f"  {i}: {t}" for i, t in enumerate(M.basis))
    return f"{M.label} ({M.size}x{M.size}, char {M.field.char})\nbasis:\n{legend}\n{M.to_text()}"


def cmd_verify(cfg: CliConfig, n_max: int, chars: list[int]):
    if n_max > cfg.cap:
        raise UsageError(f"--n-max {n_max} exceeds the cap {cfg.cap}")
    reports = []
    for n in range(1, n_max + 1):
        for b in range(n):
            shape = HookShape(n - b, b)
            regime = b % 2 == 0 and n % 2 == 1
            for p in chars:
                S = SpechtModule(shape, p)
                reports.append(verify_presentation(shape, p, cfg.cap, S))
                if regime:
                    reports.append(verify_domino_identities(shape, p, module=S))
                    if shape.a % 2 == 1 and p != 2:
                        reports.append(verify_endomorphism(shape, p, cfg.cap, S))
    ok = all(r.ok for r in reports)
    return (EXIT_OK if ok else EXIT_FAIL), reports


def cmd_table(a_range: range, b_range: range, chars: list[int]) -> list[dict]:
    rows = []
    for p in chars:
        for a in a_range:
            for b in b_range:
                if a < 1 or b < 0:
                    continue
                v = decide(a, b, p)
                rows.append({"a": a, "b": b, "n": a + b, "char": v.char,
                             "decomposable": v.decomposable, "rule": v.rule})
    return rows


def _table_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


# -- plumbing ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--trace", action="store_true", help="log which identity handled each action")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest n for brute-force checks")

    shape = argparse.ArgumentParser(add_help=False)
    shape.add_argument("--a", type=int, required=True, help="arm length (first row)")
    shape.add_argument("--b", type=int, required=True, help="leg length")
    shape.add_argument("--char", type=int, default=0, help="0 or a prime")

    ap = argparse.ArgumentParser(prog="hookspecht", description="KLR Specht modules of hook shape at e = 2")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common, shape], help="verdict, spectrum and eigenspaces")
    m = sub.add_parser("matrix", parents=[common, shape], help="exact action matrix of a generator or f")
    m.add_argument("--gen", required=True, help="psiK, yK, e_lambda, e(0101...) or f")
    v = sub.add_parser("verify", parents=[common], help="run the brute-force oracle over a grid")
    v.add_argument("--n-max", type=int, default=7)
    v.add_argument("--chars", type=parse_chars, default=[0])
    t = sub.add_parser("table", help="decomposability table")
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--out", help="write output to this file instead of stdout")
    t.add_argument("--trace", action="store_true", help=argparse.SUPPRESS)
    t.add_argument("--a", type=parse_range, required=True, help="e.g. 3..9")
    t.add_argument("--b", type=parse_range, required=True, help="e.g. 2..6")
    g = t.add_mutually_exclusive_group()
    g.add_argument("--char", type=parse_chars, default=None, help="a single characteristic")
    g.add_argument("--chars", type=parse_chars, default=None)
    return ap


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.trace:
        logging.basicConfig(level=logging.INFO, format="%(name)s: %(message)s", stream=sys.stderr)

    try:
        if args.command == "table":
            chars = args.char if args.char is not None else (args.chars or [0])
            rows = cmd_table(args.a, args.b, chars)
            if args.format == "json":
                text = json.dumps(rows, indent=2)
            else:
                text = _table_csv(rows).rstrip("\n")
            _emit(text, args.out)
            return EXIT_OK

        cfg = CliConfig(args.command, getattr(args, "a", None), getattr(args, "b", None),
                        getattr(args, "char", 0), args.format, args.cap, args.out, args.trace)
        if args.command == "analyze":
            code, rep = cmd_analyze(cfg)
            text = json.dumps(rep, indent=2) if cfg.format == "json" else _analyze_text(rep)
        elif args.command == "matrix":
            code, M = cmd_matrix(cfg, args.gen)
            text = M.to_json(indent=2) if cfg.format == "json" else _matrix_text(M)
        else:
            code, reports = cmd_verify(cfg, args.n_max, args.chars)
            if cfg.format == "json":
                text = json.dumps({"ok": code == EXIT_OK, "reports": [r.to_dict() for r in reports]}, indent=2)
            else:
                failed = [r for r in reports if not r.ok]
                lines = [r.table() for r in failed]
                lines.append(f"{len(reports) - len(failed)}/{len(reports)} suites passed")
                text = "\n".join(lines)
    except UsageError as exc:
        print(f"hookspecht: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, cfg.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
