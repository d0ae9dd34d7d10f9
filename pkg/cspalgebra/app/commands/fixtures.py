"""`fixtures list|emit`: the template catalogue."""

import argparse

from cspalgebra.fixtures import CATALOG
from cspalgebra.formats import emit_template

from ..exceptions import UsageError
from ..exit_codes import ExitCode
from ..inputs import write_text


def register(sub: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = sub.add_parser("fixtures", help="list or emit catalogue templates")
    actions = p.add_subparsers(dest="action", required=True)
    listing = actions.add_parser("list", help="names, sizes and tags")
    listing.set_defaults(handler=run_list)
    emit = actions.add_parser("emit", help="write a fixture as a template file")
    emit.add_argument("name")
    emit.add_argument("--out", metavar="PATH", default="-", help="destination, stdout by default")
    emit.set_defaults(handler=run_emit)


def run_list(args: argparse.Namespace) -> int:
    for name, entry in CATALOG.items():
        tags = f" [{', '.join(entry.tags)}]" if entry.tags else ""
        print(f"{name:18} {entry.description}{tags}")
    return ExitCode.OK


def run_emit(args: argparse.Namespace) -> int:
    entry = CATALOG.get(args.name)
    if entry is None:
        raise UsageError(f"unknown fixture '{args.name}'; known: {', '.join(CATALOG)}")
    text = f"# {entry.name}: {entry.description}\n" + emit_template(entry.build())
    write_text(args.out, text)
    return ExitCode.OK
