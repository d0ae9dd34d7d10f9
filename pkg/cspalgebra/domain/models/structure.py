"""Finite relational structures, their instances and assignments.

Domain elements and instance variables are dense integer ranges. Relation
tables are stored as frozensets of tuples aligned with the signature order,
so two structures are equal exactly when their tables are equal.
"""

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field

from cspalgebra.domain.exceptions import SignatureError

Row = tuple[int, ...]
Table = frozenset[Row]


@dataclass(frozen=True)
class RelationSymbol:
    """A relation name with its arity."""

    name: str
    arity: int


@dataclass(frozen=True)
class Signature:
    """Ordered list of relation symbols."""

    relations: tuple[RelationSymbol, ...] = ()

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for symbol in self.relations:
            if symbol.name in seen:
                raise SignatureError(f"Duplicate relation name '{symbol.name}'")
            if symbol.arity < 1:
                raise SignatureError(
                    f"Relation '{symbol.name}' has arity {symbol.arity}, expected >= 1"
                )
            seen.add(symbol.name)

    @classmethod
    def of(cls, *pairs: tuple[str, int]) -> "Signature":
        """Build a signature from (name, arity) pairs."""
        return cls(tuple(RelationSymbol(name, arity) for name, arity in pairs))

    def __len__(self) -> int:
        return len(self.relations)

    def __iter__(self) -> Iterator[RelationSymbol]:
        return iter(self.relations)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(symbol.name for symbol in self.relations)

    def index(self, name: str) -> int:
        """Position of a relation in the signature.

        Raises:
            SignatureError: If the name is not declared.
        """
        for i, symbol in enumerate(self.relations):
            if symbol.name == name:
                return i
        raise SignatureError(f"Unknown relation '{name}'")

    def arity(self, name: str) -> int:
        return self.relations[self.index(name)].arity

    def extend(self, *pairs: tuple[str, int]) -> "Signature":
        """Signature with extra symbols appended."""
        return Signature(
            self.relations + tuple(RelationSymbol(name, arity) for name, arity in pairs)
        )

    def without(self, *names: str) -> "Signature":
        return Signature(tuple(s for s in self.relations if s.name not in names))


def _freeze(rows: Iterable[Sequence[int]]) -> Table:
    return frozenset(tuple(int(v) for v in row) for row in rows)


def _resolve_tables(
    signature: Signature, relations: Mapping[str, Iterable[Sequence[int]]]
) -> tuple[Table, ...]:
    unknown = set(relations) - set(signature.names)
    if unknown:
        raise SignatureError(f"Relations not in signature: {sorted(unknown)}")
    return tuple(_freeze(relations.get(name, ())) for name in signature.names)


def _infer_signature(
    relations: Mapping[str, Iterable[Sequence[int]]],
    arities: Mapping[str, int] | None,
) -> tuple[Signature, dict[str, list[Row]]]:
    arities = dict(arities or {})
    materialized: dict[str, list[Row]] = {}
    pairs: list[tuple[str, int]] = []
    for name, rows in relations.items():
        rows = [tuple(int(v) for v in row) for row in rows]
        materialized[name] = rows
        if name not in arities:
            if not rows:
                raise SignatureError(f"Cannot infer arity of empty relation '{name}'")
            arities[name] = len(rows[0])
        pairs.append((name, arities[name]))
    return Signature.of(*pairs), materialized


class _Tables:
    """Accessors shared by structures and instances."""

    signature: Signature
    tables: tuple[Table, ...]

    def relation(self, name: str) -> Table:
        return self.tables[self.signature.index(name)]

    def items(self) -> Iterator[tuple[RelationSymbol, Table]]:
        return zip(self.signature.relations, self.tables, strict=True)

    def sorted_rows(self, index: int) -> list[Row]:
        """Rows of the index-th relation in canonical (sorted) order."""
        return sorted(self.tables[index])

    @property
    def max_arity(self) -> int:
        return max((symbol.arity for symbol in self.signature), default=0)

    @property
    def tuple_count(self) -> int:
        return sum(len(table) for table in self.tables)


@dataclass(frozen=True)
class Structure(_Tables):
    """A finite relational structure over the domain 0..domain_size-1.

    Tables are not validated here; validate_structure reports violations
    as data.
    """

    domain_size: int
    signature: Signature
    tables: tuple[Table, ...]

    @classmethod
    def create(
        cls,
        domain_size: int,
        relations: Mapping[str, Iterable[Sequence[int]]],
        arities: Mapping[str, int] | None = None,
    ) -> "Structure":
        """Build a structure, inferring arities from the first row.

        Args:
            domain_size: Number of domain elements.
            relations: Relation name to rows, in signature order.
            arities: Explicit arities, required for empty relations.
        """
        signature, rows = _infer_signature(relations, arities)
        return cls(domain_size, signature, _resolve_tables(signature, rows))

    @classmethod
    def from_signature(
        cls,
        domain_size: int,
        signature: Signature,
        relations: Mapping[str, Iterable[Sequence[int]]],
    ) -> "Structure":
        return cls(domain_size, signature, _resolve_tables(signature, relations))

    @property
    def elements(self) -> range:
        return range(self.domain_size)

    @property
    def max_relation_size(self) -> int:
        return max((len(table) for table in self.tables), default=0)

    def with_relations(
        self, relations: Mapping[str, Iterable[Sequence[int]]], arities: Mapping[str, int]
    ) -> "Structure":
        """Structure with extra relations appended to the signature."""
        signature = self.signature.extend(*((name, arities[name]) for name in relations))
        extra = tuple(_freeze(rows) for rows in relations.values())
        return Structure(self.domain_size, signature, self.tables + extra)

    def restrict_signature(self, names: Iterable[str]) -> "Structure":
        keep = set(names)
        pairs = [(s, t) for s, t in self.items() if s.name in keep]
        return Structure(
            self.domain_size,
            Signature(tuple(s for s, _ in pairs)),
            tuple(t for _, t in pairs),
        )

    def as_instance(self) -> "Instance":
        """The structure read as an instance of its own signature."""
        return Instance(self.domain_size, self.signature, self.tables)


@dataclass(frozen=True)
class Instance(_Tables):
    """A finite structure read as a CSP instance: variables plus constraints."""

    variable_count: int
    signature: Signature
    tables: tuple[Table, ...]

    @classmethod
    def create(
        cls,
        variable_count: int,
        signature: Signature,
        constraints: Mapping[str, Iterable[Sequence[int]]],
    ) -> "Instance":
        return cls(variable_count, signature, _resolve_tables(signature, constraints))

    @property
    def constraints(self) -> tuple[Table, ...]:
        return self.tables

    @property
    def variables(self) -> range:
        return range(self.variable_count)

    def occurrences(self) -> list[int]:
        """Number of constraint tuples each variable appears in."""
        counts = [0] * self.variable_count
        for table in self.tables:
            for row in table:
                for v in set(row):
                    counts[v] += 1
        return counts

    def iter_constraints(self) -> Iterator[tuple[int, Row]]:
        """(relation index, tuple) pairs in canonical order."""
        for index in range(len(self.tables)):
            for row in self.sorted_rows(index):
                yield index, row

    def as_structure(self) -> Structure:
        return Structure(self.variable_count, self.signature, self.tables)


@dataclass(frozen=True)
class Assignment:
    """Total map from variable ids to domain elements."""

    values: tuple[int, ...]

    def __getitem__(self, variable: int) -> int:
        return self.values[variable]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


@dataclass(frozen=True)
class PartialAssignment:
    """Partial map from variable ids to domain elements (a search seed)."""

    values: Mapping[int, int] = field(default_factory=dict)

    def __contains__(self, variable: int) -> bool:
        return variable in self.values

    def __len__(self) -> int:
        return len(self.values)

    def items(self) -> Iterable[tuple[int, int]]:
        return self.values.items()
