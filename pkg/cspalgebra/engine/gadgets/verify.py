"""Gadget verification and boundary extension.

A leaf gadget is checked by colouring its own graph with the coding edges
fixed. A composite gadget is checked one level up: its parts become
constraints whose tables are their (already verified) boundary relations,
over the variables given by the edges through which parts are wired. The
same machinery extends a boundary colouring to the whole gadget, part by
part, down to the leaves.
"""

import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from cspalgebra.domain.models import (
    COLORS,
    EdgeColoring,
    Gadget,
    Instance,
    Signature,
    Structure,
    canonical_pattern,
)
from cspalgebra.engine.core import find_homomorphism
from cspalgebra.engine.exceptions import CapExceededError, GadgetError, PreconditionError
from cspalgebra.engine.gadgets.coloring import COLORING_TEMPLATE, coloring_instance
from cspalgebra.engine.settings import settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GadgetVerdict:
    """Outcome of verify_gadget.

    On failure, counterexample is a boundary pattern on which the search
    (extendable) and the predicate disagree, or failed_part names a part
    that failed its own verification.
    """

    gadget: str
    checked: int
    up_to_permutation: bool
    counterexample: tuple[int, ...] | None = None
    extendable: bool | None = None
    failed_part: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None and self.failed_part is None


def check_assembly(g: Gadget) -> None:
    """Structural soundness of a composite gadget.

    Every host edge must be an internal edge of exactly one part or a coding
    edge of one or two parts, and every vertex of degree two or more must
    see edges of a single part only.

    Raises:
        GadgetError: If the parts do not tile the graph.
    """
    internal: list[int] = [0] * g.graph.edge_count
    owners: list[set[int]] = [set() for _ in range(g.graph.edge_count)]
    for index, part in enumerate(g.parts):
        if len(part.edge_map) != part.gadget.graph.edge_count:
            raise GadgetError(f"{g.name}: part {part.label} maps {len(part.edge_map)} edges")
        coding = set(part.gadget.coding_edges)
        for e, host in enumerate(part.edge_map):
            if not 0 <= host < g.graph.edge_count:
                raise GadgetError(f"{g.name}: part {part.label} maps onto missing edge {host}")
            owners[host].add(index)
            if e not in coding:
                internal[host] += 1
    for host, parts in enumerate(owners):
        if not parts:
            raise GadgetError(f"{g.name}: edge {host} belongs to no part")
        if (internal[host] and len(parts) > 1) or internal[host] > 1 or len(parts) > 2:
            raise GadgetError(f"{g.name}: edge {host} is shared illegally")
    for v, edges in enumerate(g.graph.incident()):
        if len(edges) >= 2 and not set.intersection(*(owners[e] for e in edges)):
            raise GadgetError(f"{g.name}: vertex {v} joins edges of different parts")


class Extender:
    """Extension of boundary colourings of one gadget."""

    def __init__(self, g: Gadget) -> None:
        self.gadget = g
        if g.is_leaf:
            self.instance = coloring_instance(g.graph)
            self.template = COLORING_TEMPLATE
            self.variables = list(range(g.graph.edge_count))
        else:
            check_assembly(g)
            self._compile_parts()
        index = {e: i for i, e in enumerate(self.variables)}
        try:
            self.coding = [index[e] for e in g.coding_edges]
        except KeyError as e:
            raise GadgetError(f"{g.name}: coding edge {e} is inside a part") from e

    def _compile_parts(self) -> None:
        g = self.gadget
        self.variables = sorted({host for part in g.parts for host in part.coding_map()})
        index = {e: i for i, e in enumerate(self.variables)}
        tables: dict[str, frozenset[tuple[int, ...]]] = {}
        arities: dict[str, int] = {}
        rows: dict[str, list[tuple[int, ...]]] = {}
        for part in g.parts:
            name = part.gadget.name
            if name not in tables:
                tables[name] = frozenset(part.gadget.predicate.patterns())
                arities[name] = part.gadget.predicate.arity
                rows[name] = []
            rows[name].append(tuple(index[host] for host in part.coding_map()))
        signature = Signature.of(*arities.items())
        self.template = Structure.from_signature(COLORS, signature, tables)
        self.instance = Instance.create(len(self.variables), signature, rows)
        logger.debug(
            "%s: %d parts over %d wiring edges", g.name, len(g.parts), len(self.variables)
        )

    def _solve(self, fixed: Mapping[int, int]) -> tuple[int, ...] | None:
        if self.instance is None:
            return None
        seed = {self.coding[i]: c for i, c in fixed.items()}
        h = find_homomorphism(self.instance, self.template, seed)
        return None if h is None else h.values

    def extendable(self, pattern: Sequence[int]) -> bool:
        return self._solve(dict(enumerate(pattern))) is not None

    def extend(self, fixed: Mapping[int, int]) -> EdgeColoring | None:
        """A proper colouring of the whole graph with the given coding positions fixed.

        Raises:
            PreconditionError: If a position or colour is out of range.
            GadgetError: If a part cannot realise a pattern its predicate admits.
        """
        for i, c in fixed.items():
            if not 0 <= i < len(self.coding) or not 0 <= c < COLORS:
                raise PreconditionError(f"{self.gadget.name}: bad boundary entry {i}: {c}")
        values = self._solve(fixed)
        if values is None:
            return None
        if self.gadget.is_leaf:
            return EdgeColoring(values)
        colors = [-1] * self.gadget.graph.edge_count
        for e, c in zip(self.variables, values, strict=True):
            colors[e] = c
        for part in self.gadget.parts:
            pattern = {i: colors[host] for i, host in enumerate(part.coding_map())}
            inner = extender(part.gadget).extend(pattern)
            if inner is None:
                raise GadgetError(f"{part.label} does not realise admitted pattern {pattern}")
            for e, host in enumerate(part.edge_map):
                colors[host] = inner[e]
        return EdgeColoring(tuple(colors))


@lru_cache(maxsize=128)
def extender(g: Gadget) -> Extender:
    return Extender(g)


def extend_boundary(g: Gadget, fixed: Mapping[int, int]) -> EdgeColoring | None:
    """Extend colours fixed on some coding positions to the whole gadget."""
    return extender(g).extend(fixed)


def _patterns(arity: int, canonical: bool) -> Iterator[tuple[int, ...]]:
    for pattern in product(range(COLORS), repeat=arity):
        if not canonical or canonical_pattern(pattern) == pattern:
            yield pattern


def verify_gadget(
    g: Gadget, *, exhaustive_limit: int | None = None, pattern_cap: int | None = None
) -> GadgetVerdict:
    """Check that the boundary predicate is exactly the set of extendable patterns.

    Parts of a composite gadget are verified first. Gadgets with more than
    exhaustive_limit boundary patterns are checked on one pattern per colour
    permutation class, which is exact since both sides are closed under
    colour permutations.

    Args:
        g: Gadget.
        exhaustive_limit: Defaults to settings.gadget_exhaustive_patterns.
        pattern_cap: Largest number of patterns to check. Defaults to
            settings.gadget_pattern_cap.

    Raises:
        CapExceededError: If the patterns to check exceed the cap.
        GadgetError: If a composite gadget is not tiled by its parts.
    """
    limit = settings.gadget_exhaustive_patterns if exhaustive_limit is None else exhaustive_limit
    cap = settings.gadget_pattern_cap if pattern_cap is None else pattern_cap
    k = g.predicate.arity
    canonical = COLORS**k > limit
    required = COLORS**k // 6 if canonical else COLORS**k
    if required > cap:
        raise CapExceededError(f"boundary patterns of {g.name}", required, cap)

    seen: set[str] = set()
    for part in g.parts:
        if part.gadget.name in seen:
            continue
        seen.add(part.gadget.name)
        inner = verify_gadget(part.gadget, exhaustive_limit=limit, pattern_cap=cap)
        if not inner.passed:
            logger.info("%s: part %s failed verification", g.name, part.gadget.name)
            return GadgetVerdict(g.name, 0, canonical, failed_part=part.gadget.name)

    ext = extender(g)
    checked = 0
    for pattern in _patterns(k, canonical):
        checked += 1
        found = ext.extendable(pattern)
        if found != g.predicate.admits(pattern):
            logger.info("%s: counterexample %s (extendable=%s)", g.name, pattern, found)
            return GadgetVerdict(g.name, checked, canonical, pattern, found)
    logger.debug("%s: %d boundary patterns agree with the predicate", g.name, checked)
    return GadgetVerdict(g.name, checked, canonical)


_certified: set[Gadget] = set()


def certify(g: Gadget) -> Gadget:
    """Verify a gadget once before it is used.

    Composites with more than settings.gadget_certify_patterns boundary
    patterns are certified through their parts and the tiling check alone.

    Raises:
        GadgetError: If verification fails.
    """
    if g in _certified:
        return g
    if g.is_leaf or COLORS**g.predicate.arity <= settings.gadget_certify_patterns:
        verdict = verify_gadget(g)
        if not verdict.passed:
            raise GadgetError(f"{g.name} failed verification: {verdict}")
    else:
        check_assembly(g)
        for part in g.parts:
            certify(part.gadget)
        logger.debug("%s certified through its %d parts", g.name, len(g.parts))
    _certified.add(g)
    return g
