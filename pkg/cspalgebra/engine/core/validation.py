"""Structure and instance validation."""

from dataclasses import dataclass

from cspalgebra.domain.models import Assignment, Instance, PartialAssignment, Structure
from cspalgebra.engine.exceptions import SignatureMismatchError, ValueOutOfRangeError


@dataclass(frozen=True)
class Violation:
    relation: str
    row: tuple[int, ...]
    message: str

    def __str__(self) -> str:
        return f"{self.relation}{self.row}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def _check_tables(obj: Structure | Instance, size: int) -> ValidationReport:
    violations = []
    for symbol, table in obj.items():
        for row in sorted(table):
            if len(row) != symbol.arity:
                violations.append(Violation(symbol.name, row, "arity mismatch"))
            elif any(not 0 <= v < size for v in row):
                violations.append(Violation(symbol.name, row, "element out of range"))
    return ValidationReport(tuple(violations))


def validate_structure(s: Structure) -> ValidationReport:
    """Check that every tuple has the declared arity and entries below domain_size.

    Args:
        s: Structure to check.

    Returns:
        Report listing every offending relation and tuple; ok when empty.
    """
    if s.domain_size < 1:
        return ValidationReport((Violation("", (), "domain must be non-empty"),))
    return _check_tables(s, s.domain_size)


def validate_instance(x: Instance) -> ValidationReport:
    return _check_tables(x, x.variable_count)


def require_same_signature(x: Instance | Structure, s: Structure) -> None:
    if x.signature != s.signature:
        raise SignatureMismatchError(
            f"Signatures differ: {list(x.signature.names)} vs {list(s.signature.names)}"
        )


def require_seed_in_range(seed: PartialAssignment, x: Instance, s: Structure) -> None:
    for variable, value in seed.items():
        if not 0 <= variable < x.variable_count:
            raise ValueOutOfRangeError(f"Seed variable {variable} not in instance")
        if not 0 <= value < s.domain_size:
            raise ValueOutOfRangeError(f"Seed value {value} outside domain of size {s.domain_size}")


def require_assignment_in_range(f: Assignment, x: Instance, s: Structure) -> None:
    if len(f) != x.variable_count:
        raise ValueOutOfRangeError(
            f"Assignment covers {len(f)} variables, instance has {x.variable_count}"
        )
    for value in f:
        if not 0 <= value < s.domain_size:
            raise ValueOutOfRangeError(f"Value {value} outside domain of size {s.domain_size}")
