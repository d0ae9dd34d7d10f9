"""Application exceptions."""


class AppError(Exception):
    """Base exception for the command line."""

    pass


class UsageError(AppError):
    """Arguments name a missing file, an unknown fixture or an unsupported combination."""

    pass
