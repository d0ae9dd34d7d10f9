"""Proper 3-edge-colouring as a CSP over the colours {0, 1, 2}.

Edges are the variables. A vertex of degree two contributes a "different"
constraint on its edges and a vertex of degree three an "all different"
one, so the homomorphism search (or its SAT back-end) does the colouring.
"""

import logging
from collections.abc import Mapping
from itertools import permutations

from cspalgebra.domain.models import COLORS, EdgeColoring, Graph, Instance, Structure
from cspalgebra.engine.core import find_homomorphism, sat_find_homomorphism
from cspalgebra.engine.exceptions import CapExceededError, ValueOutOfRangeError
from cspalgebra.engine.settings import settings

logger = logging.getLogger(__name__)

DIFFERENT = "NE2"
ALL_DIFFERENT = "NE3"

COLORING_TEMPLATE = Structure.create(
    COLORS,
    {
        DIFFERENT: list(permutations(range(COLORS), 2)),
        ALL_DIFFERENT: list(permutations(range(COLORS), 3)),
    },
)


def coloring_instance(g: Graph) -> Instance | None:
    """The colouring CSP of a graph, or None when some vertex has degree above three."""
    rows: dict[str, list[tuple[int, ...]]] = {DIFFERENT: [], ALL_DIFFERENT: []}
    for edges in g.incident():
        if len(edges) > COLORS:
            return None
        if len(edges) == 2:
            rows[DIFFERENT].append(tuple(edges))
        elif len(edges) == 3:
            rows[ALL_DIFFERENT].append(tuple(edges))
    return Instance.create(g.edge_count, COLORING_TEMPLATE.signature, rows)


def _check_fixed(g: Graph, fixed: Mapping[int, int]) -> None:
    for edge, color in fixed.items():
        if not 0 <= edge < g.edge_count:
            raise ValueOutOfRangeError(f"Edge {edge} not in graph")
        if not 0 <= color < COLORS:
            raise ValueOutOfRangeError(f"Colour {color} of edge {edge} not in 0..{COLORS - 1}")


def brute_force_edge_coloring(
    g: Graph,
    fixed: Mapping[int, int] | None = None,
    *,
    max_edges: int | None = None,
    node_cap: int | None = None,
) -> EdgeColoring | None:
    """Complete backtracking search for a proper 3-edge-colouring.

    Args:
        g: Graph.
        fixed: Colours fixed in advance, by edge id.
        max_edges: Edge count cap. Defaults to settings.edge_coloring_max_edges.
        node_cap: Search node cap.

    Returns:
        A proper colouring extending fixed, or None if there is none.

    Raises:
        CapExceededError: If the graph has more edges than the cap.
    """
    cap = settings.edge_coloring_max_edges if max_edges is None else max_edges
    if g.edge_count > cap:
        raise CapExceededError("edge colouring search (edges)", g.edge_count, cap)
    fixed = dict(fixed or {})
    _check_fixed(g, fixed)
    x = coloring_instance(g)
    if x is None:
        return None
    h = find_homomorphism(x, COLORING_TEMPLATE, fixed, node_cap=node_cap)
    return None if h is None else EdgeColoring(h.values)


def sat_edge_coloring(
    g: Graph,
    fixed: Mapping[int, int] | None = None,
    *,
    max_edges: int | None = None,
    solver_name: str | None = None,
) -> EdgeColoring | None:
    """Proper 3-edge-colouring through the SAT back-end.

    Raises:
        CapExceededError: If the graph has more edges than
            settings.sat_edge_coloring_max_edges.
    """
    cap = settings.sat_edge_coloring_max_edges if max_edges is None else max_edges
    if g.edge_count > cap:
        raise CapExceededError("SAT edge colouring (edges)", g.edge_count, cap)
    fixed = dict(fixed or {})
    _check_fixed(g, fixed)
    x = coloring_instance(g)
    if x is None:
        return None
    values = sat_find_homomorphism(x, COLORING_TEMPLATE, seed=fixed, solver_name=solver_name)
    return None if values is None else EdgeColoring(values)


def find_edge_coloring(g: Graph, fixed: Mapping[int, int] | None = None) -> EdgeColoring | None:
    """Native search for small graphs, SAT above settings.edge_coloring_max_edges."""
    if g.edge_count <= settings.edge_coloring_max_edges:
        return brute_force_edge_coloring(g, fixed)
    logger.debug("%d edges: colouring with the SAT back-end", g.edge_count)
    return sat_edge_coloring(g, fixed)
