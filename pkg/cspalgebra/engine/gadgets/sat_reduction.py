"""3SAT to 3-edge-colouring, with translations of solutions both ways.

Each variable occurring r times gets a setter with r coding pairs, each
clause an or-gate. Occurrence k of a variable owns the setter's pair k; a
positive occurrence is joined straight to its or-gate pair, a negated one
through an inverter. A variable is true when its pairs agree.
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from cspalgebra.domain.models import (
    Assignment,
    CNFInstance,
    EdgeColoring,
    GadgetPart,
    Graph,
)
from cspalgebra.engine.exceptions import GadgetError, PreconditionError, VerificationError
from cspalgebra.engine.gadgets.assembly import Assembly, Placement
from cspalgebra.engine.gadgets.library import A, C, E, inverter, or_gate, variable_setter
from cspalgebra.engine.gadgets.verify import certify, extend_boundary

logger = logging.getLogger(__name__)

AGREE = (0, 0)
DISAGREE = (0, 1)


@dataclass(frozen=True)
class CodingRecord:
    """Where each variable and clause of the formula sits in the graph.

    setters maps a variable to the index of its setter in parts, gates lists
    the or-gate of each clause, inverters maps (clause, literal position)
    of every negated occurrence to its inverter.
    """

    formula: CNFInstance
    graph: Graph
    parts: tuple[GadgetPart, ...]
    setters: Mapping[int, int]
    gates: tuple[int, ...]
    inverters: Mapping[tuple[int, int], int]
    pendant_count: int

    def variable_pair(self, variable: int) -> tuple[int, int] | None:
        """Host edges of the first coding pair of the variable's setter."""
        if variable not in self.setters:
            return None
        edges = self.parts[self.setters[variable]].coding_map()
        return edges[0], edges[1]


def reduce_3sat(phi: CNFInstance) -> CodingRecord:
    """Wire setters, or-gates and inverters into one graph.

    The graph is 3-edge-colourable exactly when phi is satisfiable.

    Raises:
        GadgetError: If a gadget fails certification or a vertex ends up
            with degree above three.
    """
    certify(inverter())
    certify(or_gate())
    build = Assembly()
    counts = phi.occurrences()
    setters = {
        v: build.place(certify(variable_setter(r)), f"setter v{v}")
        for v, r in enumerate(counts)
        if r > 0
    }
    gates = [build.place(or_gate(), f"clause {i}") for i in range(len(phi.clauses))]
    inverters: dict[tuple[int, int], Placement] = {}
    used = [0] * phi.variable_count
    for i, clause in enumerate(phi.clauses):
        for j, lit in enumerate(clause):
            setter, slot = setters[lit.variable], 2 * used[lit.variable]
            used[lit.variable] += 1
            if lit.positive:
                build.join_pairs(setter, slot, gates[i], 2 * j)
                continue
            h = build.place(inverter(), f"not v{lit.variable} in clause {i}")
            build.join_pairs(setter, slot, h, C)
            build.join_pairs(h, A, gates[i], 2 * j)
            build.pendant(h, E)
            inverters[(i, j)] = h

    graph = build.graph()
    if max(graph.degrees(), default=0) > 3:
        raise GadgetError("reduction produced a vertex of degree above three")
    index = {id(p): i for i, p in enumerate(build.placements)}
    record = CodingRecord(
        formula=phi,
        graph=graph,
        parts=build.parts(),
        setters={v: index[id(p)] for v, p in setters.items()},
        gates=tuple(index[id(p)] for p in gates),
        inverters={key: index[id(p)] for key, p in inverters.items()},
        pendant_count=len(build.pendants),
    )
    logger.info(
        "3SAT with %d variables, %d clauses -> graph with %d vertices, %d edges (%d inverters)",
        phi.variable_count,
        len(phi.clauses),
        graph.vertex_count,
        graph.edge_count,
        len(inverters),
    )
    return record


def coloring_to_assignment(c: EdgeColoring, record: CodingRecord) -> Assignment:
    """Read a truth assignment off a proper colouring; 1 means true.

    Variables without occurrences are false.

    Raises:
        PreconditionError: If the colouring is not proper.
        VerificationError: If the assignment does not satisfy the formula.
    """
    if not c.is_proper(record.graph):
        raise PreconditionError("not a proper 3-edge-colouring of the reduction graph")
    values = []
    for v in range(record.formula.variable_count):
        pair = record.variable_pair(v)
        values.append(pair is not None and c[pair[0]] == c[pair[1]])
    if not record.formula.satisfied_by(values):
        raise VerificationError("colouring decodes to a non-satisfying assignment")
    return Assignment(tuple(int(b) for b in values))


def assignment_to_coloring(a: Assignment | Sequence[int], record: CodingRecord) -> EdgeColoring:
    """Colour the wiring edges from a satisfying assignment, then extend every gadget.

    Raises:
        PreconditionError: If a is not a satisfying assignment.
        GadgetError: If a gadget cannot extend its boundary.
        VerificationError: If the final colouring is not proper.
    """
    phi = record.formula
    values = [bool(x) for x in a]
    if len(values) != phi.variable_count or not phi.satisfied_by(values):
        raise PreconditionError("assignment does not satisfy the formula")
    colors = [-1] * record.graph.edge_count

    def paint(edges: Sequence[int], pattern: tuple[int, int]) -> None:
        colors[edges[0]], colors[edges[1]] = pattern

    for v, index in record.setters.items():
        coding = record.parts[index].coding_map()
        for k in range(0, len(coding), 2):
            paint(coding[k : k + 2], AGREE if values[v] else DISAGREE)
    for (i, j), index in record.inverters.items():
        variable = phi.clauses[i][j].variable
        paint(record.parts[index].coding_map()[A : A + 2], DISAGREE if values[variable] else AGREE)

    for part in record.parts:
        fixed = {i: colors[e] for i, e in enumerate(part.coding_map()) if colors[e] >= 0}
        inner = extend_boundary(part.gadget, fixed)
        if inner is None:
            raise GadgetError(f"{part.label} cannot extend boundary {fixed}")
        for e, host in enumerate(part.edge_map):
            colors[host] = inner[e]

    coloring = EdgeColoring(tuple(colors))
    if not coloring.is_proper(record.graph):
        raise VerificationError("extended colouring is not proper")
    return coloring
