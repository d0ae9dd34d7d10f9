"""Template classification.

Assembles the dichotomy checks into one Verdict:
1. Siggers search on the core with singleton relations (tractability)
2. totally symmetric search at arity |D| * max arity (width 1)
3. preservation by the dual discriminator
4. the clone bucket of two-element templates
5. bipartiteness for graphs, the core shape for smooth digraphs
"""

import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import networkx as nx

from cspalgebra.domain.models import (
    BooleanBucket,
    BooleanVerdict,
    CheckResult,
    DigraphVerdict,
    Evidence,
    GraphVerdict,
    PolymorphismWitness,
    Status,
    Structure,
    Table,
    Verdict,
)
from cspalgebra.domain_service.settings import settings
from cspalgebra.engine.consistency import required_arity
from cspalgebra.engine.core import Core, find_core, singleton_expansion
from cspalgebra.engine.exceptions import (
    CapExceededError,
    NotSmoothError,
    PreconditionError,
    WrongDomainSizeError,
)
from cspalgebra.engine.polymorphism import (
    certify,
    check_cyclic,
    check_siggers,
    check_totally_symmetric,
    check_wnu,
    identities,
    operations,
    violation,
)

logger = logging.getLogger(__name__)

INTRACTABLE_LABEL = "Sigma^1_2-complete for Borel instances"
WIDTH1_LABEL = "essentially classical"

# Tried in order; the first preserving operation decides the bucket.
BOOLEAN_TESTS: tuple[tuple[str, BooleanBucket], ...] = (
    ("const0", BooleanBucket.TOTALLY_SYMMETRIC),
    ("const1", BooleanBucket.TOTALLY_SYMMETRIC),
    ("and", BooleanBucket.TOTALLY_SYMMETRIC),
    ("or", BooleanBucket.TOTALLY_SYMMETRIC),
    ("majority", BooleanBucket.TWO_SAT_CONSTRUCTIBLE),
    ("minority", BooleanBucket.AFFINE),
)


@dataclass(frozen=True)
class CoreTest:
    """Siggers search on the singleton expansion of the core."""

    core: Core
    expanded: Structure
    witness: PolymorphismWitness | None

    @property
    def tractable(self) -> bool:
        return self.witness is not None


def _unknown(e: CapExceededError) -> CheckResult:
    return CheckResult(Status.UNKNOWN, note=f"unknown (cap): {e}")


def binary_relation(s: Structure) -> Table | None:
    """The table of s when its signature is a single binary symbol."""
    if len(s.signature) != 1:
        return None
    ((symbol, table),) = s.items()
    return table if symbol.arity == 2 else None


def is_simple_graph(s: Structure) -> bool:
    table = binary_relation(s)
    return table is not None and all(u != v and (v, u) in table for u, v in table)


def is_smooth(s: Structure) -> bool:
    """Single binary relation in which every vertex has an in- and an out-neighbour."""
    table = binary_relation(s)
    if table is None:
        return False
    return {u for u, _ in table} == set(s.elements) == {v for _, v in table}


def to_digraph(s: Structure) -> nx.DiGraph:
    table = binary_relation(s)
    if table is None:
        raise PreconditionError("structure is not a single binary relation")
    g = nx.DiGraph()
    g.add_nodes_from(s.elements)
    g.add_edges_from(table)
    return g


def siggers_on_core(s: Structure, cap: int | None = None) -> CoreTest:
    """Search a Siggers polymorphism of the core expanded by all singletons.

    Raises:
        CapExceededError: If the core or indicator search exceeds its cap.
    """
    core = find_core(s)
    expanded = singleton_expansion(core.core)
    witness = check_siggers(expanded, cap)
    logger.debug(
        "siggers on core (%d of %d elements): %s",
        core.core.domain_size,
        s.domain_size,
        "found" if witness is not None else "none",
    )
    return CoreTest(core, expanded, witness)


def check_tractable(s: Structure, cap: int | None = None) -> CheckResult:
    try:
        test = siggers_on_core(s, cap)
    except CapExceededError as e:
        return _unknown(e)
    size = test.core.core.domain_size
    if test.witness is not None:
        return CheckResult(
            Status.YES, test.witness, f"Siggers operation on the {size}-element core", structure=test.expanded
        )
    return CheckResult(
        Status.NO, note=f"indicator search exhausted: no Siggers operation on the {size}-element core"
    )


def is_width1(s: Structure, cap: int | None = None) -> CheckResult:
    """Width 1 via a totally symmetric polymorphism of arity |D| * max arity.

    Arities 2, 3, ... are tried first; a totally symmetric operation of
    some arity restricts to every smaller arity, so the first failure is
    reported. A yes carries the extractor width1_solve needs.
    """
    n = required_arity(s)
    try:
        for k in range(2, n):
            if check_totally_symmetric(s, k, cap) is None:
                return CheckResult(
                    Status.NO, note=f"no totally symmetric polymorphism of arity {k}", arity=k
                )
        witness = check_totally_symmetric(s, n, cap)
    except CapExceededError as e:
        return _unknown(e)
    if witness is None:
        return CheckResult(Status.NO, note=f"no totally symmetric polymorphism of arity {n}", arity=n)
    return CheckResult(
        Status.YES, witness, f"totally symmetric extractor of arity {n}", arity=n, structure=s
    )


def check_dual_discriminator_verdict(s: Structure) -> CheckResult:
    op = operations.dual_discriminator(s.domain_size)
    broken = violation(op, s)
    if broken is not None:
        return CheckResult(Status.NO, note=f"dual discriminator breaks {broken[0]} on rows {broken[1]}")
    witness = certify({"d": op}, identities.empty(3, "d"), s)
    return CheckResult(Status.YES, witness, "dual discriminator preserves every relation", structure=s)


def classify_boolean(s: Structure) -> BooleanVerdict:
    """Clone bucket of a two-element template.

    Raises:
        WrongDomainSizeError: If the domain does not have two elements.
    """
    if s.domain_size != 2:
        raise WrongDomainSizeError(f"boolean classification needs 2 elements, got {s.domain_size}")
    for name, bucket in BOOLEAN_TESTS:
        op = operations.boolean_named(name)
        if violation(op, s) is None:
            witness = certify({name: op}, identities.empty(op.arity, name), s)
            logger.debug("boolean bucket %s via %s", bucket.value, name)
            return BooleanVerdict(bucket, name, witness)
    return BooleanVerdict(BooleanBucket.INTRACTABLE)


def classify_graph(s: Structure, cap: int | None = None) -> GraphVerdict:
    """Bipartiteness, cross-checked against the Siggers search on the core.

    Raises:
        PreconditionError: If s is not a simple graph.
        CapExceededError: If the Siggers search exceeds the cap.
    """
    if not is_simple_graph(s):
        raise PreconditionError("structure is not a simple graph")
    bipartite = nx.is_bipartite(to_digraph(s).to_undirected())
    test = siggers_on_core(s, cap)
    if test.tractable != bipartite:
        logger.warning("bipartiteness and the Siggers search disagree")
    return GraphVerdict(bipartite, test.core.core.domain_size, bipartite, test.tractable == bipartite)


def is_cycle_union(s: Structure) -> bool:
    """Every vertex has exactly one in-neighbour and one out-neighbour."""
    g = to_digraph(s)
    return all(g.in_degree(v) == 1 and g.out_degree(v) == 1 for v in g.nodes)


def classify_smooth_digraph(s: Structure, cap: int | None = None) -> DigraphVerdict:
    """Tractable iff the core is a disjoint union of directed cycles.

    Raises:
        NotSmoothError: If some vertex is a source or a sink.
        CapExceededError: If the core or Siggers search exceeds its cap.
    """
    if binary_relation(s) is None:
        raise PreconditionError("structure is not a single binary relation")
    if not is_smooth(s):
        raise NotSmoothError("not smooth")
    test = siggers_on_core(s, cap)
    cycles = is_cycle_union(test.core.core)
    if test.tractable != cycles:
        logger.warning("core shape and the Siggers search disagree")
    return DigraphVerdict(test.core.core.domain_size, cycles, cycles, test.tractable == cycles)


def _primes(limit: int) -> list[int]:
    return [p for p in range(2, limit + 1) if all(p % q for q in range(2, p))]


def collect_evidence(s: Structure, cap: int | None = None) -> list[Evidence]:
    """Cyclic and WNU searches on the expanded core, as configured."""
    out: list[Evidence] = []
    if not settings.collect_cyclic_evidence and not settings.wnu_arities:
        return out
    try:
        expanded = singleton_expansion(find_core(s).core)
    except CapExceededError as e:
        return [Evidence("note", f"evidence skipped: {e}")]
    searches: list[tuple[str, Callable[[], PolymorphismWitness | None]]] = []
    if settings.collect_cyclic_evidence:
        searches += [
            (f"cyclic({p})", lambda p=p: check_cyclic(expanded, p, cap))
            for p in _primes(settings.cyclic_max_prime)
            if p > s.domain_size
        ]
    searches += [(f"wnu({n})", lambda n=n: check_wnu(expanded, n, cap)) for n in settings.wnu_arities]
    for name, search in searches:
        try:
            witness = search()
        except CapExceededError as e:
            out.append(Evidence(name, f"unknown (cap): {e}"))
            continue
        found = "found" if witness is not None else "none (search exhausted)"
        out.append(
            Evidence(name, f"{name} polymorphism on the expanded core: {found}", witness, expanded)
        )
    return out


def classify_template(
    s: Structure, template_id: str = "template", *, cap: int | None = None
) -> Verdict:
    """Run every applicable check on one template.

    The three independent checks run concurrently and are merged in a fixed
    order; cap refusals become unknown fields instead of errors.
    """
    with ThreadPoolExecutor(max_workers=settings.check_workers) as pool:
        tractable_f = pool.submit(check_tractable, s, cap)
        width1_f = pool.submit(is_width1, s, cap)
        dual_f = pool.submit(check_dual_discriminator_verdict, s)
        tractable, width1, dual = tractable_f.result(), width1_f.result(), dual_f.result()

    boolean = classify_boolean(s) if s.domain_size == 2 else BooleanVerdict(BooleanBucket.NOT_BOOLEAN)
    evidence = [Evidence("preprocessing", "core expanded by singleton relations U<c> before the Siggers search")]

    graph = digraph = None
    try:
        if is_simple_graph(s):
            graph = classify_graph(s, cap)
        elif is_smooth(s):
            digraph = classify_smooth_digraph(s, cap)
    except CapExceededError as e:
        evidence.append(Evidence("note", f"graph verdict skipped: {e}"))
    evidence += collect_evidence(s, cap)

    labels = []
    if tractable.status is Status.NO:
        labels.append(INTRACTABLE_LABEL)
    if width1.status is Status.YES:
        labels.append(WIDTH1_LABEL)
    logger.info(
        "%s: tractable %s, width1 %s, dual discriminator %s",
        template_id,
        tractable.status.value,
        width1.status.value,
        dual.status.value,
    )
    return Verdict(
        template_id,
        tractable,
        width1,
        dual,
        boolean,
        graph,
        digraph,
        tuple(labels),
        tuple(evidence),
    )


def classify_many(
    templates: Sequence[tuple[str, Structure]], *, jobs: int = 1, cap: int | None = None
) -> list[Verdict]:
    """Classify several templates; the output keeps the input order."""
    if jobs <= 1:
        return [classify_template(s, name, cap=cap) for name, s in templates]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda item: classify_template(item[1], item[0], cap=cap), templates))
