"""Subcommands; each module registers its parser and handler."""

from . import classify, fixtures, gadget, obstruct, reduce, solve, verify_report

COMMANDS = (classify, solve, reduce, obstruct, gadget, fixtures, verify_report)

__all__ = ["COMMANDS"]
