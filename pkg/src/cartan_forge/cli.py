"""``cartan-forge`` command line.

Exit status: 0 when every verdict passes, 1 on a failed verdict or an unmet
mathematical precondition, 2 on unusable input.
"""

from __future__ import annotations

import argparse
import sys

from .parser import ParseError
from .problem import ProblemError, load, resolve_max_order
from .report import dump_json, dump_text
from .runner import (InputError, cmd_corpus, cmd_euler, cmd_internal, cmd_presymplectic,
                     cmd_reduce, cmd_roundtrip)

COMMANDS = ("euler", "internal", "roundtrip", "corpus", "reduce", "presymplectic")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cartan-forge",
        description="Exact variational calculus on jet spaces: Euler operators, correction "
                    "forms, internal Lagrangians and presymplectic structures.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file", nargs="?", metavar="FILE",
                   help="problem file (for 'corpus': an entry name or 'all')")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--max-order", type=int, metavar="N",
                   help="derivative order bound for reduction (default 12)")
    p.add_argument("--form", metavar="NAME", help="which [form NAME] section to use")
    p.add_argument("--timing", action="store_true",
                   help="include stage timings (makes output non-reproducible)")
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.file is None:
        err.write(f"cartan-forge: {args.command} needs a "
                  f"{'corpus entry name' if args.command == 'corpus' else 'problem file'}\n")
        return 2
    as_json = args.json
    try:
        if args.max_order is not None:
            resolve_max_order(args.max_order)
        if args.command == "corpus":
            reports = cmd_corpus(args.file, args.max_order, args.timing)
        else:
            problem = load(args.file, args.max_order)
            as_json = as_json or problem.options.get("format") == "json"
            if args.command == "euler":
                reports = [cmd_euler(problem, args.timing)]
            elif args.command == "internal":
                reports = [cmd_internal(problem, args.timing)]
            elif args.command == "roundtrip":
                reports = [cmd_roundtrip(problem, args.form, args.timing)]
            elif args.command == "reduce":
                reports = [cmd_reduce(problem, args.timing)]
            else:
                reports = [cmd_presymplectic(problem, args.form, args.timing)]
    except OSError as exc:
        err.write(f"cartan-forge: cannot read {args.file}: {exc.strerror}\n")
        return 2
    except (ProblemError, ParseError, InputError) as exc:
        err.write(f"cartan-forge: {exc}\n")
        return 2
    out.write(dump_json(reports) if as_json else dump_text(reports))
    return 0 if all(r.ok for r in reports) else 1


def main() -> None:
    sys.exit(run())


__all__ = ["main", "run", "build_parser", "COMMANDS"]
