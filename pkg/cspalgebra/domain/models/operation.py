"""Finitary operations, height 1 identities and polymorphism witnesses."""

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import product
from typing import Any

import numpy as np

from cspalgebra.domain.exceptions import MalformedIdentityError, MalformedOperationError


@dataclass(frozen=True, eq=False)
class Operation:
    """An operation D^arity -> D stored as a dense lookup table.

    The table is indexed by the mixed-radix code of the argument tuple,
    first argument most significant.
    """

    domain_size: int
    arity: int
    table: np.ndarray

    def __post_init__(self) -> None:
        table = np.asarray(self.table, dtype=np.int64).reshape(-1)
        expected = self.domain_size**self.arity
        if table.shape[0] != expected:
            raise MalformedOperationError(
                f"Table has {table.shape[0]} entries, expected {expected}"
            )
        if expected and (table.min() < 0 or table.max() >= self.domain_size):
            raise MalformedOperationError("Operation output outside the domain")
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    @classmethod
    def from_function(
        cls, domain_size: int, arity: int, fn: Callable[..., int]
    ) -> "Operation":
        values = [fn(*args) for args in product(range(domain_size), repeat=arity)]
        return cls(domain_size, arity, np.array(values, dtype=np.int64))

    @classmethod
    def from_nested(cls, domain_size: int, arity: int, nested: Any) -> "Operation":
        """Rebuild an operation from the nested-array form used in reports."""
        return cls(domain_size, arity, np.array(nested, dtype=np.int64).reshape(-1))

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.domain_size,) * self.arity

    def index(self, args: Sequence[int]) -> int:
        code = 0
        for a in args:
            code = code * self.domain_size + int(a)
        return code

    def __call__(self, *args: int) -> int:
        if len(args) != self.arity:
            raise MalformedOperationError(
                f"Operation of arity {self.arity} applied to {len(args)} arguments"
            )
        return int(self.table[self.index(args)])

    def apply_columns(self, rows: np.ndarray) -> np.ndarray:
        """Apply the operation to every column of an (arity, m) array."""
        codes = np.ravel_multi_index(tuple(rows), self.shape)
        return self.table[codes]

    def as_nested(self) -> Any:
        return self.table.reshape(self.shape).tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Operation):
            return NotImplemented
        return (
            self.domain_size == other.domain_size
            and self.arity == other.arity
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self) -> int:
        return hash((self.domain_size, self.arity, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"Operation(domain_size={self.domain_size}, arity={self.arity})"


@dataclass(frozen=True)
class FlatTerm:
    """A single function symbol applied to abstract variable names."""

    symbol: str
    args: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.symbol}({','.join(self.args)})"


@dataclass(frozen=True)
class IdentitySystem:
    """Height 1 identities over declared function symbols."""

    symbols: tuple[tuple[str, int], ...]
    equations: tuple[tuple[FlatTerm, FlatTerm], ...] = ()
    name: str = "custom"

    def __post_init__(self) -> None:
        declared = dict(self.symbols)
        if len(declared) != len(self.symbols):
            raise MalformedIdentityError("Duplicate function symbol")
        for left, right in self.equations:
            for term in (left, right):
                if term.symbol not in declared:
                    raise MalformedIdentityError(f"Undeclared symbol in {term}")
                if len(term.args) != declared[term.symbol]:
                    raise MalformedIdentityError(
                        f"{term} does not match arity {declared[term.symbol]}"
                    )

    def arity(self, symbol: str) -> int:
        return dict(self.symbols)[symbol]

    def abstract_variables(self, equation: tuple[FlatTerm, FlatTerm]) -> tuple[str, ...]:
        """Variable names of one equation in first-occurrence order."""
        seen: dict[str, None] = {}
        for term in equation:
            for arg in term.args:
                seen.setdefault(arg, None)
        return tuple(seen)

    def __str__(self) -> str:
        return "; ".join(f"{left}={right}" for left, right in self.equations) or "(none)"


@dataclass(frozen=True)
class Certificate:
    """Record of the re-verification a witness passed."""

    identities: str
    equations_checked: int
    relations_checked: tuple[str, ...]
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class PolymorphismWitness:
    """Operations bound to every declared symbol, plus their certificate."""

    operations: Mapping[str, Operation]
    certificate: Certificate
    parameters: Mapping[str, int] = field(default_factory=dict)

    def operation(self, symbol: str | None = None) -> Operation:
        """The operation for a symbol, or the only one when unspecified."""
        if symbol is None:
            (op,) = self.operations.values()
            return op
        return self.operations[symbol]
