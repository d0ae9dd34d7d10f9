"""Named operations."""

from collections.abc import Sequence
from itertools import product

import numpy as np

from cspalgebra.domain.models import Operation
from cspalgebra.engine.exceptions import WrongDomainSizeError

# Rows and columns indexed by r, p, s = 0, 1, 2.
RPS_TABLE = ((0, 1, 0), (1, 1, 2), (0, 2, 2))


def _grid(domain_size: int, arity: int) -> np.ndarray:
    """All argument tuples in table order, shape (domain_size**arity, arity)."""
    return np.array(list(product(range(domain_size), repeat=arity)), dtype=np.int64).reshape(
        -1, arity
    )


def projection(domain_size: int, arity: int, i: int) -> Operation:
    """The i-th projection, 0-based."""
    return Operation(domain_size, arity, _grid(domain_size, arity)[:, i])


def identity(domain_size: int) -> Operation:
    return projection(domain_size, 1, 0)


def constant(domain_size: int, arity: int, c: int) -> Operation:
    return Operation(domain_size, arity, np.full(domain_size**arity, c, dtype=np.int64))


def minimum(domain_size: int, arity: int = 2) -> Operation:
    """min, which is the n-ary "and" on {0,1}."""
    return Operation(domain_size, arity, _grid(domain_size, arity).min(axis=1))


def maximum(domain_size: int, arity: int = 2) -> Operation:
    return Operation(domain_size, arity, _grid(domain_size, arity).max(axis=1))


def dual_discriminator(domain_size: int) -> Operation:
    """d(x,y,z) = y if y = z, else x; the majority function on {0,1}."""
    grid = _grid(domain_size, 3)
    return Operation(domain_size, 3, np.where(grid[:, 1] == grid[:, 2], grid[:, 1], grid[:, 0]))


def majority() -> Operation:
    return dual_discriminator(2)


def minority() -> Operation:
    """x + y + z over the two-element field."""
    return Operation(2, 3, _grid(2, 3).sum(axis=1) % 2)


def rock_paper_scissors() -> Operation:
    return Operation.from_nested(3, 2, RPS_TABLE)


def from_permutation(permutation: Sequence[int]) -> Operation:
    """Unary operation x -> permutation[x].

    Raises:
        WrongDomainSizeError: If the sequence is not a permutation of 0..n-1.
    """
    if sorted(permutation) != list(range(len(permutation))):
        raise WrongDomainSizeError(f"{list(permutation)} is not a permutation")
    return Operation(len(permutation), 1, np.array(permutation, dtype=np.int64))


def boolean_named(name: str) -> Operation:
    """The operations tried by the two-element classifier, by name."""
    table = {
        "const0": lambda: constant(2, 1, 0),
        "const1": lambda: constant(2, 1, 1),
        "and": lambda: minimum(2),
        "or": lambda: maximum(2),
        "majority": majority,
        "minority": minority,
    }
    return table[name]()
