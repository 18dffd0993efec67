"""Command line interface: ``palstream {run,verify,gen,bench}``.

Exit codes: 0 on success, 2 on parameter errors, 1 on I/O or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .generators import gen_nu, gen_planted, gen_random
from .runner import MODES, ParameterError, RunParams, bench, parse_grid, run, verify

EXIT_OK, EXIT_IO, EXIT_PARAM = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARAM, f"{self.prog}: error: {message}\n")


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", required=True, choices=MODES)
    p.add_argument("--error", type=int, help="additive error E (>= 2)")
    p.add_argument("--epsilon", type=float, help="multiplicative error (> 0)")
    p.add_argument("--window", type=int, help="exact window m (>= 1)")
    p.add_argument("--seed", type=int, default=0, help="fingerprint seed")
    p.add_argument("--complement", action="store_true", help="reverse-complement palindromes over ACGT")
    p.add_argument("--input", help="input file (default: stdin)")
    p.add_argument("--strip-newline", action="store_true", help="drop one trailing newline from the input")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="palstream", description="Streaming longest palindromic substring.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    _add_run_flags(sub.add_parser("run", help="stream the input once and report the answer as JSON"))
    _add_run_flags(sub.add_parser("verify", help="like run, plus an offline oracle check"))

    g = sub.add_parser("gen", help="write a test stream")
    g.add_argument("kind", choices=("nu", "random", "planted"))
    g.add_argument("--length", type=int, required=True)
    g.add_argument("--sigma", type=int, default=2)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--planted-len", type=int)
    g.add_argument("--out", required=True)

    b = sub.add_parser("bench", help="run a parameter grid and write CSV")
    b.add_argument("--grid", required=True, help="grid spec, or the path of a file holding one")
    b.add_argument("--out", required=True, help="CSV path, '-' for stdout")
    return parser


class _StripNewline:
    """Binary reader that withholds one trailing ``\\n`` (and a preceding ``\\r``)."""

    def __init__(self, raw):
        self.raw = raw
        self.held = b""

    def read(self, size: int) -> bytes:
        while True:
            data = self.held + self.raw.read(size)
            if len(data) == len(self.held):
                # end of input: emit what is held minus the newline
                tail, self.held = data, b""
                if tail.endswith(b"\n"):
                    tail = tail[:-1]
                    if tail.endswith(b"\r"):
                        tail = tail[:-1]
                return tail
            self.held = data[-2:]
            out = data[:-2]
            if out:
                return out


def _cmd_run(args, fn) -> int:
    params = RunParams(args.error, args.epsilon, args.window, args.seed, args.complement)
    try:
        source = open(args.input, "rb") if args.input else sys.stdin.buffer
    except OSError as exc:
        print(f"palstream: cannot read input: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        with source:
            reader = _StripNewline(source) if args.strip_newline else source
            report = fn(args.mode, params, reader)
    except ParameterError as exc:
        print(f"palstream: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except OSError as exc:
        print(f"palstream: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        # bad symbols in the input
        print(f"palstream: invalid input: {exc}", file=sys.stderr)
        return EXIT_IO
    json.dump(report.to_dict(), sys.stdout)
    sys.stdout.write("\n")
    return EXIT_OK


def _cmd_gen(args) -> int:
    try:
        if args.length < 0:
            raise ValueError("--length must be non-negative")
        if not 2 <= args.sigma <= 256:
            raise ValueError("--sigma must be between 2 and 256")
        offset = ord("a") if args.sigma <= 26 else 0
        if args.kind == "nu":
            data = gen_nu(args.length, offset=ord("0"))
        elif args.kind == "random":
            data = gen_random(args.length, args.sigma, args.seed, offset=offset)
        else:
            if args.planted_len is None:
                raise ValueError("planted streams need --planted-len")
            data = gen_planted(args.length, args.sigma, args.seed, args.planted_len, offset=offset)
    except (ValueError, TypeError) as exc:
        print(f"palstream: {exc}", file=sys.stderr)
        return EXIT_PARAM
    try:
        with open(args.out, "wb") as fh:
            fh.write(bytes(data))
    except OSError as exc:
        print(f"palstream: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_bench(args) -> int:
    spec = args.grid
    if os.path.isfile(spec):
        try:
            with open(spec, encoding="utf-8") as fh:
                spec = ";".join(line.split("#", 1)[0].strip() for line in fh)
        except OSError as exc:
            print(f"palstream: cannot read grid file: {exc}", file=sys.stderr)
            return EXIT_IO
    try:
        cells = parse_grid(spec)
    except ParameterError as exc:
        print(f"palstream: {exc}", file=sys.stderr)
        return EXIT_PARAM
    try:
        if args.out == "-":
            bench(cells, sys.stdout)
        else:
            with open(args.out, "w", newline="", encoding="utf-8") as fh:
                bench(cells, fh)
    except OSError as exc:
        print(f"palstream: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args, run)
    if args.command == "verify":
        return _cmd_run(args, verify)
    if args.command == "gen":
        return _cmd_gen(args)
    return _cmd_bench(args)


if __name__ == "__main__":
    sys.exit(main())
