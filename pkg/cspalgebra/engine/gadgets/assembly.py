"""Wiring gadgets together through their coding edges.

Placing a gadget copies its graph without the stub vertices; each coding
edge becomes a port at its internal endpoint. Ports are then joined to
each other by a single edge, or exposed through a fresh degree-one vertex.
"""

from dataclasses import dataclass, field

from cspalgebra.domain.models import BoundaryPredicate, Gadget, GadgetPart, Graph
from cspalgebra.engine.exceptions import GadgetError


@dataclass
class Placement:
    gadget: Gadget
    label: str
    ports: tuple[int, ...]
    edge_map: list[int | None]

    def port_edge(self, position: int) -> int | None:
        return self.edge_map[self.gadget.coding_edges[position]]


@dataclass
class Assembly:
    """Graph under construction with the parts placed in it."""

    vertex_count: int = 0
    edges: list[tuple[int, int]] = field(default_factory=list)
    placements: list[Placement] = field(default_factory=list)
    stubs: set[int] = field(default_factory=set)
    pendants: set[int] = field(default_factory=set)

    def _vertex(self) -> int:
        self.vertex_count += 1
        return self.vertex_count - 1

    def _edge(self, u: int, v: int) -> int:
        self.edges.append((u, v))
        return len(self.edges) - 1

    def place(self, gadget: Gadget, label: str = "") -> Placement:
        g = gadget.graph
        renumber = {v: self._vertex() for v in range(g.vertex_count) if v not in gadget.stubs}
        coding = set(gadget.coding_edges)
        edge_map: list[int | None] = [None] * g.edge_count
        for i, (u, v) in enumerate(g.edges):
            if i not in coding:
                edge_map[i] = self._edge(renumber[u], renumber[v])
        ports = []
        for e in gadget.coding_edges:
            u, v = g.edges[e]
            if (u in gadget.stubs) == (v in gadget.stubs):
                raise GadgetError(f"Coding edge {e} of {gadget.name} needs exactly one stub end")
            ports.append(renumber[v] if u in gadget.stubs else renumber[u])
        placement = Placement(gadget, label or gadget.name, tuple(ports), edge_map)
        self.placements.append(placement)
        return placement

    def _claim(self, p: Placement, position: int, edge: int) -> None:
        e = p.gadget.coding_edges[position]
        if p.edge_map[e] is not None:
            raise GadgetError(f"Port {position} of {p.label} is already wired")
        p.edge_map[e] = edge

    def join(self, p: Placement, i: int, q: Placement, j: int) -> int:
        """Connect port i of p to port j of q with one edge."""
        edge = self._edge(p.ports[i], q.ports[j])
        self._claim(p, i, edge)
        self._claim(q, j, edge)
        return edge

    def join_pairs(self, p: Placement, i: int, q: Placement, j: int) -> tuple[int, int]:
        """Join ports (i, i+1) of p to ports (j, j+1) of q."""
        return self.join(p, i, q, j), self.join(p, i + 1, q, j + 1)

    def expose(self, p: Placement, i: int) -> int:
        """Give port i a fresh stub vertex; the edge becomes a coding edge of the result."""
        stub = self._vertex()
        self.stubs.add(stub)
        edge = self._edge(p.ports[i], stub)
        self._claim(p, i, edge)
        return edge

    def pendant(self, p: Placement, i: int) -> int:
        """Give port i a fresh degree-one vertex that stays internal."""
        end = self._vertex()
        self.pendants.add(end)
        edge = self._edge(p.ports[i], end)
        self._claim(p, i, edge)
        return edge

    def parts(self) -> tuple[GadgetPart, ...]:
        out = []
        for p in self.placements:
            if any(e is None for e in p.edge_map):
                raise GadgetError(f"Part {p.label} has unwired ports")
            out.append(GadgetPart(p.gadget, tuple(e for e in p.edge_map if e is not None), p.label))
        return tuple(out)

    def graph(self) -> Graph:
        return Graph(self.vertex_count, tuple(self.edges))

    def build(
        self, name: str, coding_edges: tuple[int, ...], predicate: BoundaryPredicate
    ) -> Gadget:
        """The composite gadget; exposed stubs not listed as coding edges are rejected."""
        ends = {v for e in coding_edges for v in self.edges[e]}
        if not self.stubs <= ends:
            raise GadgetError(f"{name}: exposed stubs missing from the coding edges")
        return Gadget(name, self.graph(), coding_edges, predicate, frozenset(self.stubs), self.parts())
