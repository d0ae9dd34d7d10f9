"""Loading templates, instances and reports named on the command line.

A template argument is a file path when such a file exists, else a
catalogue fixture name.
"""

import sys
from dataclasses import dataclass
from pathlib import Path

from cspalgebra.domain.models import Instance, Signature, Structure
from cspalgebra.fixtures import CATALOG
from cspalgebra.formats import (
    ReportDocument,
    dump_report,
    parse_document,
    parse_instance,
    parse_template,
)

from .exceptions import UsageError
from .settings import settings


@dataclass(frozen=True)
class TemplateInput:
    name: str
    structure: Structure
    labels: tuple[str, ...] = ()
    tags: tuple[str, ...] = ()


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from e


def load_template(ref: str, base: Path | None = None) -> TemplateInput:
    """Resolve a template argument.

    Args:
        ref: File path or fixture name.
        base: Directory that relative paths are tried against first.

    Raises:
        UsageError: If ref is neither a readable file nor a fixture.
        ParseError: If the file is malformed.
    """
    candidates = [base / ref] if base is not None else []
    candidates.append(Path(ref))
    for path in candidates:
        if path.is_file():
            text = read_text(path)
            structure = parse_template(text, str(path))
            return TemplateInput(path.stem, structure, parse_document(text, str(path)).labels)
    entry = CATALOG.get(ref)
    if entry is None:
        raise UsageError(f"'{ref}' is neither a template file nor a fixture name")
    return TemplateInput(ref, entry.build(), tags=entry.tags)


def load_instance(path: str, signature: Signature) -> Instance:
    return parse_instance(read_text(path), signature, path)


def write_text(path: str, text: str) -> None:
    """Write text to path; '-' is stdout."""
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot write {path}: {e.strerror}") from e


def write_report(doc: ReportDocument, path: str | None) -> None:
    """Write the report to path; nothing when path is None."""
    if path is not None:
        write_text(path, dump_report(doc, settings.json_indent))
