"""Text files for templates, instances and lifts.

    # comment
    domain 3            (templates; instances use "variables N")
    labels r p s        (optional, templates only)
    rel E 2
    r p
    p s
    liftmap             (lift files only: the image of every variable)
    0 0 1

Tuples are whitespace-separated elements, one per line. Emission is
canonical: header, labels, then relations in signature order with sorted
tuples.
"""

import re
from collections.abc import Sequence
from dataclasses import dataclass, field

from cspalgebra.domain.models import Instance, Lift, Row, Signature, Structure
from cspalgebra.formats.exceptions import ParseError

DOMAIN = "domain"
VARIABLES = "variables"
NAME_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass
class _Block:
    name: str
    arity: int
    line: int
    rows: list[Row] = field(default_factory=list)


@dataclass
class TextDocument:
    """A parsed file before it becomes a structure, instance or lift."""

    header: str
    size: int
    labels: tuple[str, ...] = ()
    blocks: list[_Block] = field(default_factory=list)
    liftmap: list[int] | None = None

    def relations(self) -> dict[str, list[Row]]:
        return {b.name: b.rows for b in self.blocks}

    def arities(self) -> dict[str, int]:
        return {b.name: b.arity for b in self.blocks}


def _tokens(line: str) -> list[tuple[str, int]]:
    code = line.split("#", 1)[0]
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", code)]


def _int(token: str, lineno: int, column: int, source: str, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got '{token}'", lineno, column, source) from None
    if value < 0:
        raise ParseError(f"{what} must be non-negative, got {value}", lineno, column, source)
    return value


class _Parser:
    def __init__(self, source: str) -> None:
        self.source = source
        self.doc: TextDocument | None = None
        self.block: _Block | None = None
        self.in_liftmap = False

    def error(self, message: str, lineno: int, column: int = 1) -> ParseError:
        return ParseError(message, lineno, column, self.source)

    def feed(self, lineno: int, toks: list[tuple[str, int]]) -> None:
        word, column = toks[0]
        if word in (DOMAIN, VARIABLES):
            self.header(lineno, toks)
            return
        doc = self.doc
        if doc is None:
            raise self.error(f"expected '{DOMAIN} N' or '{VARIABLES} N' first", lineno, column)
        if word == "labels":
            self.labels(doc, lineno, toks)
        elif word == "rel":
            self.relation(doc, lineno, toks)
        elif word == "liftmap":
            if doc.header != VARIABLES or len(toks) != 1 or doc.liftmap is not None:
                raise self.error("'liftmap' needs a variables header and no arguments", lineno, column)
            doc.liftmap = []
            self.in_liftmap = True
            self.block = None
        elif self.in_liftmap:
            assert doc.liftmap is not None
            doc.liftmap += [_int(t, lineno, c, self.source, "lift image") for t, c in toks]
        elif self.block is not None:
            self.row(doc, self.block, lineno, toks)
        else:
            raise self.error("tuple outside a 'rel' block", lineno, column)

    def header(self, lineno: int, toks: list[tuple[str, int]]) -> None:
        word, column = toks[0]
        if self.doc is not None:
            raise self.error("duplicate header", lineno, column)
        if len(toks) != 2:
            raise self.error(f"expected '{word} N'", lineno, column)
        size = _int(toks[1][0], lineno, toks[1][1], self.source, word)
        self.doc = TextDocument(word, size)

    def labels(self, doc: TextDocument, lineno: int, toks: list[tuple[str, int]]) -> None:
        column = toks[0][1]
        if doc.header != DOMAIN or doc.blocks or doc.labels:
            raise self.error("labels must follow the domain header", lineno, column)
        names = [t for t, _ in toks[1:]]
        if len(names) != doc.size or len(set(names)) != len(names):
            raise self.error(f"expected {doc.size} distinct labels", lineno, column)
        for token, c in toks[1:]:
            if token.lstrip("-").isdigit():
                raise self.error(f"label '{token}' looks like a number", lineno, c)
        doc.labels = tuple(names)

    def relation(self, doc: TextDocument, lineno: int, toks: list[tuple[str, int]]) -> None:
        if len(toks) != 3:
            raise self.error("expected 'rel NAME ARITY'", lineno, toks[0][1])
        (name, name_col), (arity_token, arity_col) = toks[1], toks[2]
        if not NAME_PATTERN.fullmatch(name):
            raise self.error(f"bad relation name '{name}'", lineno, name_col)
        if any(b.name == name for b in doc.blocks):
            raise self.error(f"relation '{name}' declared twice", lineno, name_col)
        arity = _int(arity_token, lineno, arity_col, self.source, "arity")
        if arity < 1:
            raise self.error("arity must be at least 1", lineno, arity_col)
        self.block = _Block(name, arity, lineno)
        self.in_liftmap = False
        doc.blocks.append(self.block)

    def row(self, doc: TextDocument, block: _Block, lineno: int, toks: list[tuple[str, int]]) -> None:
        if len(toks) != block.arity:
            column = toks[block.arity][1] if len(toks) > block.arity else toks[-1][1]
            raise self.error(
                f"relation '{block.name}' has arity {block.arity}, got {len(toks)} values", lineno, column
            )
        index = {label: i for i, label in enumerate(doc.labels)}
        values = []
        for token, column in toks:
            value = index[token] if token in index else _int(token, lineno, column, self.source, "element")
            if value >= doc.size:
                raise self.error(f"element {value} outside 0..{doc.size - 1}", lineno, column)
            values.append(value)
        block.rows.append(tuple(values))


def parse_document(text: str, source: str = "<input>") -> TextDocument:
    """Parse any text file into its document form.

    Raises:
        ParseError: On syntax, range or arity errors, with the position.
    """
    parser = _Parser(source)
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokens(line)
        if toks:
            parser.feed(lineno, toks)
    if parser.doc is None:
        raise ParseError(f"missing '{DOMAIN}' or '{VARIABLES}' header", 1, 1, source)
    return parser.doc


def _expect(doc: TextDocument, header: str, source: str) -> None:
    if doc.header != header:
        raise ParseError(f"expected a '{header}' header, got '{doc.header}'", 1, 1, source)


def parse_template(text: str, source: str = "<input>") -> Structure:
    """Parse a template file.

    Raises:
        ParseError: On malformed input or an instance header.
    """
    doc = parse_document(text, source)
    _expect(doc, DOMAIN, source)
    return Structure.create(doc.size, doc.relations(), doc.arities())


def template_labels(text: str, source: str = "<input>") -> tuple[str, ...]:
    return parse_document(text, source).labels


def _instance(doc: TextDocument, signature: Signature | None, source: str) -> Instance:
    if signature is None:
        signature = Signature.of(*((b.name, b.arity) for b in doc.blocks))
    for block in doc.blocks:
        if block.name not in signature.names:
            raise ParseError(f"relation '{block.name}' is not in the template", block.line, 1, source)
        if signature.arity(block.name) != block.arity:
            raise ParseError(
                f"relation '{block.name}' has arity {signature.arity(block.name)} in the template",
                block.line,
                1,
                source,
            )
    return Instance.create(doc.size, signature, doc.relations())


def parse_instance(text: str, signature: Signature | None = None, source: str = "<input>") -> Instance:
    """Parse an instance file, optionally against a template signature.

    Relations missing from the file are empty; the result uses the
    signature's relation order.

    Raises:
        ParseError: On malformed input or relations that do not fit the signature.
    """
    doc = parse_document(text, source)
    _expect(doc, VARIABLES, source)
    return _instance(doc, signature, source)


def parse_lift(
    text: str, target: Instance, signature: Signature | None = None, source: str = "<input>"
) -> Lift:
    """Parse a lift file: an instance plus the image of each of its variables in target.

    The returned lift has acyclic=False until a caller checks the instance.

    Raises:
        ParseError: If the liftmap is missing, has the wrong length or leaves target.
    """
    doc = parse_document(text, source)
    _expect(doc, VARIABLES, source)
    instance = _instance(doc, signature, source)
    if doc.liftmap is None or len(doc.liftmap) != doc.size:
        raise ParseError(f"liftmap must list {doc.size} images", 1, 1, source)
    if any(v >= target.variable_count for v in doc.liftmap):
        raise ParseError(f"liftmap leaves 0..{target.variable_count - 1}", 1, 1, source)
    return Lift(instance, tuple(doc.liftmap), acyclic=False)


def _emit(header: str, size: int, obj: Structure | Instance, labels: Sequence[str] = ()) -> list[str]:
    lines = [f"{header} {size}"]
    if labels:
        lines.append("labels " + " ".join(labels))
    for i, symbol in enumerate(obj.signature):
        lines.append(f"rel {symbol.name} {symbol.arity}")
        for row in obj.sorted_rows(i):
            lines.append(" ".join(labels[v] if labels else str(v) for v in row))
    return lines


def emit_template(s: Structure, labels: Sequence[str] = ()) -> str:
    return "\n".join(_emit(DOMAIN, s.domain_size, s, labels)) + "\n"


def emit_instance(x: Instance) -> str:
    return "\n".join(_emit(VARIABLES, x.variable_count, x)) + "\n"


def emit_lift(lift: Lift) -> str:
    lines = _emit(VARIABLES, lift.instance.variable_count, lift.instance)
    lines += ["liftmap", " ".join(map(str, lift.lift_map))]
    return "\n".join(lines) + "\n"


def emit_assignment(values: Sequence[int], labels: Sequence[str] = ()) -> str:
    """One 'variable value' line per variable."""
    return "".join(f"{v} {labels[a] if labels else a}\n" for v, a in enumerate(values))
