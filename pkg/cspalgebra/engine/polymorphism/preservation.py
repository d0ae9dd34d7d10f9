"""Does an operation preserve the relations of a structure."""

from collections.abc import Iterator

import numpy as np

from cspalgebra.domain.models import Operation, Structure
from cspalgebra.engine.exceptions import WrongDomainSizeError

CHUNK = 1 << 16


def encode_rows(rows: np.ndarray, domain_size: int) -> np.ndarray:
    """Mixed-radix codes of the rows of an (m, k) array."""
    if rows.shape[1] == 0:
        return np.zeros(rows.shape[0], dtype=np.int64)
    return np.ravel_multi_index(tuple(rows.T), (domain_size,) * rows.shape[1])


def relation_rows(s: Structure, index: int) -> np.ndarray:
    symbol = s.signature.relations[index]
    rows = s.sorted_rows(index)
    return np.array(rows, dtype=np.int64).reshape(len(rows), symbol.arity)


def _selections(m: int, n: int) -> Iterator[np.ndarray]:
    """All n-fold row selections from m rows in chunks of shape (n, c)."""
    total = m**n
    shape = (m,) * n
    for start in range(0, total, CHUNK):
        flat = np.arange(start, min(total, start + CHUNK), dtype=np.int64)
        yield np.stack(np.unravel_index(flat, shape))


def violation(op: Operation, s: Structure) -> tuple[str, list[tuple[int, ...]]] | None:
    """A relation and the rows op maps outside it, or None if op preserves s.

    Raises:
        WrongDomainSizeError: If op and s have different domains.
    """
    if op.domain_size != s.domain_size:
        raise WrongDomainSizeError(
            f"Operation on {op.domain_size} elements, structure on {s.domain_size}"
        )
    d = s.domain_size
    for index, symbol in enumerate(s.signature):
        rows = relation_rows(s, index)
        if rows.shape[0] == 0:
            continue
        codes = np.sort(encode_rows(rows, d))
        for selection in _selections(rows.shape[0], op.arity):
            image = np.stack(
                [op.apply_columns(rows[selection, j]) for j in range(symbol.arity)], axis=1
            )
            found = np.isin(encode_rows(image, d), codes)
            if not found.all():
                bad = selection[:, int(np.argmin(found))]
                return symbol.name, [tuple(int(v) for v in rows[i]) for i in bad]
    return None


def preserves(op: Operation, s: Structure) -> bool:
    """True iff op applied columnwise to any op.arity tuples of a relation stays in it."""
    return violation(op, s) is None
