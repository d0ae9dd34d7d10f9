"""Categorical powers, induced substructures and singleton expansions."""

import numpy as np

from cspalgebra.domain.models import Structure
from cspalgebra.engine.exceptions import CapExceededError
from cspalgebra.engine.settings import settings


def row_selections(m: int, n: int) -> np.ndarray:
    """All n-fold selections of row indices from m rows, shape (n, m**n)."""
    if n == 0:
        return np.zeros((0, 1), dtype=np.int64)
    grids = np.meshgrid(*([np.arange(m, dtype=np.int64)] * n), indexing="ij")
    return np.stack([g.reshape(-1) for g in grids])


def power_table(rows: np.ndarray, domain_size: int, n: int) -> np.ndarray:
    """Tuples of R^(D^n) as encoded element codes, shape (m**n, k).

    Args:
        rows: Relation rows, shape (m, k).
        domain_size: Size of the base domain.
        n: Exponent.
    """
    m, k = rows.shape
    if m == 0:
        return np.zeros((0, k), dtype=np.int64)
    selection = row_selections(m, n)
    shape = (domain_size,) * n
    columns = [np.ravel_multi_index(tuple(rows[selection, j]), shape) for j in range(k)]
    return np.stack(columns, axis=1)


def power(s: Structure, n: int, cap: int | None = None) -> Structure:
    """The n-th categorical power of s.

    Element codes are mixed-radix encodings of n-tuples, first coordinate
    most significant; a k-tuple of codes is in R iff every coordinate
    projection is in R^s.

    Raises:
        ValueError: If n < 1.
        CapExceededError: If domain_size**n or the tuple count exceeds the cap.
    """
    if n < 1:
        raise ValueError("power exponent must be >= 1")
    cap = cap if cap is not None else settings.power_cap
    size = s.domain_size**n
    if size > cap:
        raise CapExceededError("power domain", size, cap)
    tables = []
    for symbol, table in s.items():
        required = len(table) ** n
        if required > cap:
            raise CapExceededError(f"power tuples of {symbol.name}", required, cap)
        rows = np.array(sorted(table), dtype=np.int64).reshape(len(table), symbol.arity)
        encoded = power_table(rows, s.domain_size, n)
        tables.append(frozenset(tuple(int(v) for v in r) for r in encoded))
    return Structure(size, s.signature, tuple(tables))


def induced_substructure(s: Structure, elements: list[int] | range) -> tuple[Structure, tuple[int, ...]]:
    """Substructure on the given elements, renumbered in ascending order.

    Returns:
        The substructure and the tuple of original elements per new element.
    """
    kept = tuple(sorted(set(elements)))
    index = {e: i for i, e in enumerate(kept)}
    tables = tuple(
        frozenset(tuple(index[v] for v in row) for row in table if all(v in index for v in row))
        for table in s.tables
    )
    return Structure(len(kept), s.signature, tables), kept


def _is_singleton(s: Structure, name: str, c: int) -> bool:
    return s.signature.arity(name) == 1 and s.relation(name) == frozenset({(c,)})


def singleton_names(s: Structure) -> dict[int, str]:
    """Name of the singleton relation of every element of s.

    U{c} unless s already has a different relation of that name; then the
    first of U{c}_1, U{c}_2, ... that s lacks or already holds as {c}.
    """
    names = {}
    for c in s.elements:
        name, suffix = f"U{c}", 0
        while name in s.signature.names and not _is_singleton(s, name, c):
            suffix += 1
            name = f"U{c}_{suffix}"
        names[c] = name
    return names


def singleton_expansion(s: Structure) -> Structure:
    """s with one unary relation {c} for every element c, named by singleton_names.

    Singleton relations already present are kept as they are.
    """
    relations = {
        name: [(c,)] for c, name in singleton_names(s).items() if name not in s.signature.names
    }
    return s.with_relations(relations, dict.fromkeys(relations, 1))
