"""The gadget library: inverter, ring, or-gate and variable setter.

Leaves carry their full graph, stub vertices included. The or-gate and the
setters are assemblies of inverters (and one ring), so their boundary
relations can be checked from the parts.
"""

from functools import cache

from cspalgebra.domain.models import Gadget, Graph
from cspalgebra.engine.exceptions import CapExceededError, PreconditionError
from cspalgebra.engine.gadgets.assembly import Assembly
from cspalgebra.engine.gadgets.predicates import (
    AllOrNothing,
    InverterPredicate,
    RingPredicate,
    SomePairAgrees,
)
from cspalgebra.engine.settings import settings

# Inverter ports (coding positions)
A, B, C, D, E = range(5)


@cache
def inverter() -> Gadget:
    """Seven cubic vertices with coding edges a, b, c, d, e.

    Vertices 0..6 are A, B, C, D, E, M, N; 7..11 are the stubs of a..e.
    """
    a, b, c, d, e, m, n = range(7)
    coding = [(a, 7), (b, 8), (c, 9), (d, 10), (e, 11)]
    internal = [(a, m), (a, c), (b, n), (b, d), (m, e), (m, d), (e, n), (n, c)]
    return Gadget(
        "inverter",
        Graph(12, tuple(coding + internal)),
        coding_edges=(0, 1, 2, 3, 4),
        predicate=InverterPredicate(),
        stubs=frozenset(range(7, 12)),
    )


@cache
def ring() -> Gadget:
    """A 7-cycle with a coding edge at each of its first six vertices."""
    coding = [(i, 7 + i) for i in range(6)]
    cycle = [(i, (i + 1) % 7) for i in range(7)]
    return Gadget(
        "ring",
        Graph(13, tuple(coding + cycle)),
        coding_edges=tuple(range(6)),
        predicate=RingPredicate(),
        stubs=frozenset(range(7, 13)),
    )


@cache
def or_gate() -> Gadget:
    """Three inverters whose (a, b) pairs sit on the ring.

    Coding pairs are the (c, d) pairs of the inverters; the e edges are
    pendants.
    """
    build = Assembly()
    cycle = build.place(ring())
    coding: list[int] = []
    for i in range(3):
        h = build.place(inverter(), f"inverter{i}")
        build.join_pairs(h, A, cycle, 2 * i)
        coding += [build.expose(h, C), build.expose(h, D)]
        build.pendant(h, E)
    return build.build("or_gate", tuple(coding), SomePairAgrees(3))


class _Module:
    """Two inverters in series plus a repeater feeding the previous module.

    The (c, d) pair of the near inverter agrees exactly when the (a, b) pair
    of the far one does; their e edges form the pair handed to the repeater.
    """

    def __init__(self, build: Assembly, k: int) -> None:
        self.near = build.place(inverter(), f"near{k}")
        self.far = build.place(inverter(), f"far{k}")
        self.first = build.place(inverter(), f"repeat{k}a")
        self.second = build.place(inverter(), f"repeat{k}b")
        build.join_pairs(self.near, A, self.far, C)
        build.join(self.near, E, self.first, C)
        build.join(self.far, E, self.first, D)
        build.join_pairs(self.first, A, self.second, C)
        build.pendant(self.first, E)
        build.pendant(self.second, E)


@cache
def variable_setter(n: int) -> Gadget:
    """Gadget with n coding pairs that either all agree or all disagree.

    Pair k is the (c, d) pair of module k; the repeater of module k drives
    the far pair of module k - 1, closing a ring of modules. Agreement of
    one pair therefore spreads to every pair, while an all-disagreeing
    boundary extends by choosing each far pair with a third colour
    different from that of its outer pair.

    Raises:
        PreconditionError: If n < 1.
        CapExceededError: If n exceeds settings.setter_max_pairs.
    """
    if n < 1:
        raise PreconditionError(f"Variable setter needs at least one pair, got {n}")
    if n > settings.setter_max_pairs:
        raise CapExceededError("variable setter pairs", n, settings.setter_max_pairs)
    build = Assembly()
    modules = [_Module(build, k) for k in range(n)]
    for k, module in enumerate(modules):
        build.join_pairs(module.second, A, modules[k - 1].far, A)
    coding: list[int] = []
    for module in modules:
        coding += [build.expose(module.near, C), build.expose(module.near, D)]
    return build.build(f"variable_setter_{n}", tuple(coding), AllOrNothing(n))
