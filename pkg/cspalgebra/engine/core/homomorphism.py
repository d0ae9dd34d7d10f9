"""Homomorphism checks, search and solution projection."""

from collections.abc import Iterator, Mapping, Sequence

from cspalgebra.domain.models import Assignment, Instance, PartialAssignment, Structure
from cspalgebra.engine.core.search import HomomorphismSearch
from cspalgebra.engine.core.validation import (
    require_assignment_in_range,
    require_same_signature,
    require_seed_in_range,
)
from cspalgebra.engine.exceptions import ValueOutOfRangeError


def is_homomorphism(f: Assignment | Sequence[int], x: Instance, s: Structure) -> bool:
    """True iff every constraint tuple of x maps into the matching table of s.

    Raises:
        SignatureMismatchError: If x and s have different signatures.
        ValueOutOfRangeError: If f is not total or maps outside the domain.
    """
    require_same_signature(x, s)
    f = f if isinstance(f, Assignment) else Assignment(tuple(f))
    require_assignment_in_range(f, x, s)
    values = f.values
    for table, target in zip(x.tables, s.tables, strict=True):
        for row in table:
            if tuple(values[v] for v in row) not in target:
                return False
    return True


def _seed(seed: PartialAssignment | Mapping[int, int] | None) -> PartialAssignment:
    if seed is None:
        return PartialAssignment()
    if isinstance(seed, PartialAssignment):
        return seed
    return PartialAssignment(dict(seed))


def find_homomorphism(
    x: Instance,
    s: Structure,
    seed: PartialAssignment | Mapping[int, int] | None = None,
    *,
    order: str | None = None,
    node_cap: int | None = None,
) -> Assignment | None:
    """Extend a seed to a homomorphism x -> s.

    Args:
        x: Instance.
        s: Template with the same signature.
        seed: Values fixed in advance.
        order: Variable order, "mrv" or "index". Defaults to settings.
        node_cap: Search node cap. Defaults to settings.search_node_cap.

    Returns:
        A total homomorphism extending the seed, or None if there is none.

    Raises:
        SignatureMismatchError: If signatures differ.
        ValueOutOfRangeError: If the seed is out of range.
        CapExceededError: If the node cap is reached.
    """
    require_same_signature(x, s)
    seed = _seed(seed)
    require_seed_in_range(seed, x, s)
    values = HomomorphismSearch(x, s, order=order, node_cap=node_cap).run(seed.values)
    return None if values is None else Assignment(values)


def iter_homomorphisms(
    x: Instance,
    s: Structure,
    seed: PartialAssignment | Mapping[int, int] | None = None,
    *,
    node_cap: int | None = None,
) -> Iterator[Assignment]:
    """Every homomorphism x -> s extending the seed, in search order."""
    require_same_signature(x, s)
    seed = _seed(seed)
    require_seed_in_range(seed, x, s)
    search = HomomorphismSearch(x, s, node_cap=node_cap)
    domains = search.initial_domains(seed.values)
    if domains is None:
        return
    for state in search.solutions(domains):
        yield Assignment(search.decode(state))


def project_solutions(
    x: Instance,
    s: Structure,
    variables: Sequence[int],
    *,
    node_cap: int | None = None,
) -> set[tuple[int, ...]]:
    """Restrictions of all solutions to the given variables.

    Branches on the projected variables first and runs one feasibility search
    per candidate tuple, so the full solution set is never materialized.

    Raises:
        ValueOutOfRangeError: If variables is empty or out of range.
    """
    require_same_signature(x, s)
    if not variables:
        raise ValueOutOfRangeError("Projection needs at least one variable")
    if any(not 0 <= v < x.variable_count for v in variables):
        raise ValueOutOfRangeError("Projected variable not in instance")
    search = HomomorphismSearch(x, s, node_cap=node_cap)
    domains = search.initial_domains()
    if domains is None:
        return set()
    result: set[tuple[int, ...]] = set()
    for state in search.solutions(domains, variables):
        if search.first(state) is not None:
            result.add(tuple(state[v].bit_length() - 1 for v in variables))
    return result


def hom_equivalent(s: Structure, t: Structure) -> bool:
    """True iff there are homomorphisms in both directions."""
    require_same_signature(s, t)
    return (
        find_homomorphism(s.as_instance(), t) is not None
        and find_homomorphism(t.as_instance(), s) is not None
    )


def disjoint_union(
    x: Instance, y: Instance
) -> tuple[Instance, tuple[int, ...], tuple[int, ...]]:
    """Disjoint union with the renumbering maps of both sides.

    The variables of x keep their ids; those of y are shifted past them.
    """
    require_same_signature(x, y.as_structure())
    offset = x.variable_count
    tables = tuple(
        a | frozenset(tuple(v + offset for v in row) for row in b)
        for a, b in zip(x.tables, y.tables, strict=True)
    )
    union = Instance(x.variable_count + y.variable_count, x.signature, tables)
    return union, tuple(range(offset)), tuple(range(offset, offset + y.variable_count))
