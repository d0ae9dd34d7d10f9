"""DIMACS CNF input for the edge-colouring reduction.

Every clause must have exactly three literals on distinct variables;
comment lines start with 'c'.
"""

from cspalgebra.domain.exceptions import MalformedCNFError
from cspalgebra.domain.models import CNFInstance
from cspalgebra.formats.exceptions import ParseError


def parse_dimacs(text: str, source: str = "<input>") -> CNFInstance:
    """Parse a 'p cnf V C' file into a 3-CNF formula.

    Clauses end with 0 and may span lines.

    Raises:
        ParseError: On a bad header, literal, clause length or clause count.
    """
    header: tuple[int, int] | None = None
    clauses: list[list[int]] = []
    current: list[int] = []
    start = (1, 1)
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(("c", "%")):
            continue
        if stripped.startswith("p"):
            parts = stripped.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("expected a single 'p cnf VARIABLES CLAUSES' line", lineno, 1, source)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError("header counts must be integers", lineno, 1, source) from None
            continue
        if header is None:
            raise ParseError("clause before the 'p cnf' header", lineno, 1, source)
        column = 0
        for token in line.split():
            column = line.index(token, column) + 1
            try:
                literal = int(token)
            except ValueError:
                raise ParseError(f"bad literal '{token}'", lineno, column, source) from None
            if not current:
                start = (lineno, column)
            if literal == 0:
                if len(current) != 3 or len({abs(v) for v in current}) != 3:
                    raise ParseError("clause needs three literals on distinct variables", *start, source)
                clauses.append(current)
                current = []
            elif abs(literal) > header[0]:
                raise ParseError(f"literal {literal} exceeds {header[0]} variables", lineno, column, source)
            else:
                current.append(literal)
            column += len(token) - 1
    if header is None:
        raise ParseError("missing 'p cnf' header", 1, 1, source)
    if current:
        raise ParseError("last clause is not terminated by 0", *start, source)
    if len(clauses) != header[1]:
        raise ParseError(f"header declares {header[1]} clauses, found {len(clauses)}", 1, 1, source)
    try:
        return CNFInstance.from_signed(header[0], clauses)
    except MalformedCNFError as e:
        raise ParseError(str(e), 1, 1, source) from e


def emit_dimacs(phi: CNFInstance) -> str:
    lines = [f"p cnf {phi.variable_count} {len(phi.clauses)}"]
    for clause in phi.clauses:
        literals = [(lit.variable + 1) * (1 if lit.positive else -1) for lit in clause]
        lines.append(" ".join(map(str, literals)) + " 0")
    return "\n".join(lines) + "\n"
