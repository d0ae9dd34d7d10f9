"""Process exit statuses."""

from enum import IntEnum


class ExitCode(IntEnum):
    OK = 0
    NEGATIVE = 1  # negative verdict, unsolvable instance or failed verification
    USAGE = 2  # bad arguments or unparsable input
    CAP = 3  # a size cap refused the computation
