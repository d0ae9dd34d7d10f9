"""Cores, retractions and automorphisms."""

import logging
from dataclasses import dataclass

from cspalgebra.domain.models import Structure
from cspalgebra.engine.core.homomorphism import iter_homomorphisms
from cspalgebra.engine.core.products import induced_substructure
from cspalgebra.engine.core.search import HomomorphismSearch
from cspalgebra.engine.exceptions import CapExceededError
from cspalgebra.engine.settings import settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Core:
    """The core of a structure with the maps relating it to the original.

    Attributes:
        core: Induced substructure on the image of an idempotent endomorphism.
        retraction: Homomorphism original -> core (core numbering), identity on the image.
        embedding: Original element for each core element.
    """

    core: Structure
    retraction: tuple[int, ...]
    embedding: tuple[int, ...]


def find_core(s: Structure, node_cap: int | None = None) -> Core:
    """Shrink s along endomorphisms that miss an element until none exists.

    Raises:
        CapExceededError: If the endomorphism searches exceed the node cap.
    """
    budget = node_cap if node_cap is not None else settings.endomorphism_node_cap
    spent = 0
    current = s
    elements: tuple[int, ...] = tuple(s.elements)
    retraction = list(s.elements)
    shrinking = True
    while shrinking:
        shrinking = False
        instance = current.as_instance()
        for v in current.elements:
            target, kept = induced_substructure(current, [e for e in current.elements if e != v])
            search = HomomorphismSearch(instance, target, node_cap=budget - spent)
            try:
                h = search.run()
            except CapExceededError as e:
                raise CapExceededError("endomorphism search nodes", None, budget) from e
            spent += search.nodes
            if h is None:
                continue
            image = sorted({kept[i] for i in h})
            core, image_elements = induced_substructure(current, image)
            position = {e: i for i, e in enumerate(image_elements)}
            step = [position[kept[h[e]]] for e in current.elements]
            retraction = [step[r] for r in retraction]
            elements = tuple(elements[e] for e in image_elements)
            current = core
            shrinking = True
            logger.debug("core search: %d -> %d elements", len(step), current.domain_size)
            break

    # The retraction restricted to the core is an automorphism sigma; use
    # sigma^-1 after it so the retraction fixes the core pointwise.
    sigma = [retraction[e] for e in elements]
    inverse = [0] * len(sigma)
    for i, image in enumerate(sigma):
        inverse[image] = i
    retraction = [inverse[r] for r in retraction]
    return Core(current, tuple(retraction), elements)


def is_core(s: Structure) -> bool:
    return find_core(s).core.domain_size == s.domain_size


def automorphisms(s: Structure) -> list[tuple[int, ...]]:
    """All bijective endomorphisms of s."""
    return [
        h.values
        for h in iter_homomorphisms(s.as_instance(), s, node_cap=settings.endomorphism_node_cap)
        if len(set(h.values)) == s.domain_size
    ]


def automorphism_orbits(s: Structure) -> list[frozenset[int]]:
    """Orbits of the automorphism group, ordered by least element."""
    autos = automorphisms(s)
    seen: set[int] = set()
    orbits = []
    for c in s.elements:
        if c in seen:
            continue
        orbit = frozenset(f[c] for f in autos)
        seen |= orbit
        orbits.append(orbit)
    return orbits


def is_transitive(s: Structure) -> bool:
    return len(automorphism_orbits(s)) == 1
