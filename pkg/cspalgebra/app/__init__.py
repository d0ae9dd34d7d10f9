"""Application layer - command line and composition root."""

from cspalgebra.app.main import create_parser, run_cli

__all__ = ["create_parser", "run_cli"]
