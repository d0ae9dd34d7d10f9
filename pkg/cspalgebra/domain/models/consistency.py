"""Arc-consistency witnesses and closed paths."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from cspalgebra.domain.exceptions import MalformedPathError


def mask_of(values: Iterable[int]) -> int:
    mask = 0
    for v in values:
        mask |= 1 << v
    return mask


def values_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class Witness:
    """Per-variable EXCLUDED value sets f(x), as bitmasks over the domain.

    The allowed set is U_x = D minus f(x). A witness is good when no
    variable has every value excluded.
    """

    domain_size: int
    excluded: tuple[int, ...]

    @classmethod
    def empty(cls, domain_size: int, variable_count: int) -> "Witness":
        return cls(domain_size, (0,) * variable_count)

    @classmethod
    def from_allowed(
        cls, domain_size: int, allowed: Sequence[Iterable[int]]
    ) -> "Witness":
        full = (1 << domain_size) - 1
        return cls(domain_size, tuple(full & ~mask_of(u) for u in allowed))

    @property
    def full_mask(self) -> int:
        return (1 << self.domain_size) - 1

    @property
    def variable_count(self) -> int:
        return len(self.excluded)

    def allowed_mask(self, variable: int) -> int:
        return self.full_mask & ~self.excluded[variable]

    def allowed(self, variable: int) -> tuple[int, ...]:
        return values_of(self.allowed_mask(variable))

    @property
    def is_good(self) -> bool:
        return all(f != self.full_mask for f in self.excluded)

    def is_subset_of(self, other: "Witness") -> bool:
        """True if every excluded set is contained in the other's."""
        return all(a & ~b == 0 for a, b in zip(self.excluded, other.excluded, strict=True))


@dataclass(frozen=True)
class PathStep:
    """One constraint occurrence on a closed path, entered at j and left at k."""

    relation: int
    row: tuple[int, ...]
    j: int
    k: int


@dataclass(frozen=True)
class ClosedPath:
    """Alternating variables and constraint tuples, first variable equal to last."""

    variables: tuple[int, ...]
    steps: tuple[PathStep, ...]

    def __post_init__(self) -> None:
        if len(self.variables) != len(self.steps) + 1:
            raise MalformedPathError("A path of n steps has n + 1 variables")
        if self.variables and self.variables[0] != self.variables[-1]:
            raise MalformedPathError("Closed path must end where it starts")
        for i, step in enumerate(self.steps):
            if step.j == step.k:
                raise MalformedPathError(f"Step {i} enters and leaves at coordinate {step.j}")
            if (step.row[step.j], step.row[step.k]) != self.variables[i : i + 2]:
                raise MalformedPathError(f"Step {i} does not connect its variables")

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def start(self) -> int:
        return self.variables[0]

    def rotate(self, offset: int) -> "ClosedPath":
        """The same cycle started at its offset-th variable."""
        n = len(self.steps)
        steps = tuple(self.steps[(offset + i) % n] for i in range(n))
        variables = tuple(self.variables[(offset + i) % n] for i in range(n)) + (
            self.variables[offset % n],
        )
        return ClosedPath(variables, steps)


@dataclass(frozen=True)
class CycleAudit:
    """Outcome of a cycle-consistency audit up to a path length."""

    passed: bool
    max_len: int | None
    cycles_checked: int
    path: ClosedPath | None = None
    value: int | None = None

    @property
    def label(self) -> str:
        bound = "unbounded" if self.max_len is None else f"up to length {self.max_len}"
        return f"{'PASS' if self.passed else 'FAIL'} ({bound})"
