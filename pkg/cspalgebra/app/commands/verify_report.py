"""`verify-report`: re-check every witness and solution in a JSON report."""

import argparse

from cspalgebra.formats import load_report, verify_report

from ..exit_codes import ExitCode
from ..inputs import read_text


def register(sub: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = sub.add_parser("verify-report", help="re-check the witnesses of a JSON report")
    p.add_argument("report", help="report written with --json")
    p.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    problems = verify_report(load_report(read_text(args.report)))
    for problem in problems:
        print(f"FAIL {problem}")
    if problems:
        return ExitCode.NEGATIVE
    print("all witnesses verified")
    return ExitCode.OK
