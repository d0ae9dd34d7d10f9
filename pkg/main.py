"""cspalgebra command-line entry point."""

import sys

from cspalgebra.app import run_cli

if __name__ == "__main__":
    sys.exit(run_cli())
