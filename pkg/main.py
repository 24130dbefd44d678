#!/usr/bin/env python
"""
Command-line frontend for the Coxeter kernel.

    python main.py --type B4 nf "s2 s3 s2 s1 s0 s2 s3"
    python main.py --type B4 project "s2 s3 s2 s1 s0 s2 s3" "~s3"
    python main.py --type B3 verify all --scope exhaustive
    python main.py --type A2 hasse bruhat
    python main.py serve
"""
import argparse
import json
import logging
import os
import subprocess
import sys
from typing import List, Optional

from components.cli import commands
from services.coxeter_system import CoxeterError
from services.hasse import ORDERS
from services.theorem_suite import STATEMENT_ALIASES, STATEMENTS
from utils.config import settings

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxeter",
        description="inversion sets, descents and parabolic quotients in Coxeter groups",
    )
    parser.add_argument("--type", dest="type_name", help="catalog type, e.g. A3, B4, H3, I2(5), I2(inf)")
    parser.add_argument("--group-file", help="JSON group-spec file")
    parser.add_argument("--cap", type=int, help=f"length cap for enumeration (default {settings.length_cap})")
    parser.add_argument("--json", action="store_true", help="emit the structured JSON mirror")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    nf = sub.add_parser("nf", help="normal form and length of a word")
    nf.add_argument("word")

    descents = sub.add_parser("descents", help="left and right descent sets")
    descents.add_argument("word")

    inversions = sub.add_parser("inversions", help="left (or right) inversion set")
    inversions.add_argument("word")
    inversions.add_argument("--side", choices=("left", "right"), default="left")

    project = sub.add_parser("project", help="parabolic factorization w = w^J w_J")
    project.add_argument("word")
    project.add_argument("mask", help='"s0,s1", "~s3" for a complement, "" or "S"')

    sub.add_parser("enumerate", help="list the elements up to the length cap")

    verify = sub.add_parser("verify", help="run a verification sweep")
    verify.add_argument("statement", choices=list(STATEMENTS) + ["all"] + list(STATEMENT_ALIASES))
    verify.add_argument("--scope", choices=("exhaustive", "sample"))
    verify.add_argument("--seed", type=int)
    verify.add_argument("--samples", type=int)

    hasse = sub.add_parser("hasse", help="DOT Hasse diagram of the weak or Bruhat order")
    hasse.add_argument("order", choices=ORDERS)

    oracle = sub.add_parser("oracle-check", help="compare against the permutation models")
    oracle.add_argument("--samples", default="exhaustive", help="'exhaustive' or a count")
    oracle.add_argument("--seed", type=int)

    sub.add_parser("serve", help="start the Streamlit explorer")
    return parser


def serve() -> int:
    port = os.environ.get("PORT", "8080")
    cmd = [
        f"{sys.executable}",
        "-m",
        "streamlit",
        "run",
        "Home.py",
        "--server.port",
        port,
        "--server.address",
        "0.0.0.0",
    ]
    return subprocess.call(cmd)


def dispatch(args: argparse.Namespace) -> commands.CommandResult:
    context = commands.resolve_group(args.type_name, args.group_file, args.cap)
    if args.command == "nf":
        return commands.cmd_nf(context, args.word)
    if args.command == "descents":
        return commands.cmd_descents(context, args.word)
    if args.command == "inversions":
        return commands.cmd_inversions(context, args.word, args.side)
    if args.command == "project":
        return commands.cmd_project(context, args.word, args.mask)
    if args.command == "enumerate":
        return commands.cmd_enumerate(context)
    if args.command == "verify":
        return commands.cmd_verify(context, args.statement, args.scope, args.seed, args.samples)
    if args.command == "hasse":
        return commands.cmd_hasse(context, args.order)
    if args.command == "oracle-check":
        return commands.cmd_oracle_check(context, args.samples, args.seed)
    raise commands.UsageError(f"unknown command {args.command}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = {0: settings.log_level, 1: "INFO"}.get(args.verbose, "DEBUG")
    logging.basicConfig(level=level, stream=sys.stderr)

    if args.command == "serve":
        return serve()
    try:
        result = dispatch(args)
    except CoxeterError as e:
        code = commands.exit_code_for(e)
        logger.debug(f"{type(e).__name__} mapped to exit code {code}")
        if args.json:
            print(json.dumps({"schema": commands.SCHEMA_VERSION, "error": type(e).__name__,
                              "message": str(e), "exit_code": code}))
        else:
            print(f"error: {e}", file=sys.stderr)
        return code

    if args.json:
        print(json.dumps(result.payload, ensure_ascii=False, indent=2))
    elif result.text:
        print(result.text)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
