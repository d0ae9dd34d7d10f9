"""`gadget verify|build`: edge-colouring gadgets and the 3-SAT reduction."""

import argparse
from itertools import product

from cspalgebra.domain.models import COLORS, Gadget, canonical_pattern
from cspalgebra.engine.gadgets import (
    coloring_to_assignment,
    find_edge_coloring,
    inverter,
    or_gate,
    reduce_3sat,
    ring,
    variable_setter,
    verify_gadget,
)
from cspalgebra.engine.gadgets.verify import extender
from cspalgebra.formats import (
    CodingModel,
    GadgetModel,
    ReportDocument,
    emit_assignment,
    emit_edge_list,
    parse_dimacs,
)

from ..exceptions import UsageError
from ..exit_codes import ExitCode
from ..inputs import read_text, write_report, write_text

GADGETS = ("inverter", "ring", "or-gate", "setter")


def register(sub: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = sub.add_parser("gadget", help="verify gadgets or build the 3-SAT reduction")
    actions = p.add_subparsers(dest="action", required=True)

    verify = actions.add_parser("verify", parents=[common], help="check a gadget's boundary predicate")
    verify.add_argument("name", choices=GADGETS)
    verify.add_argument("pairs", nargs="?", type=int, default=None, help="coding pairs of a setter")
    verify.add_argument("--transcript", action="store_true", help="print every boundary pattern checked")
    verify.set_defaults(handler=run_verify)

    build = actions.add_parser("build", parents=[common], help="wire a DIMACS 3-CNF into a cubic graph")
    build.add_argument("cnf", help="DIMACS file")
    build.add_argument("--coloring", action="store_true", help="search a 3-edge-colouring and read it back")
    build.add_argument("--out", metavar="PATH", default=None, help="write the edge list here")
    build.set_defaults(handler=run_build)


def gadget_named(name: str, pairs: int | None) -> Gadget:
    """Library gadget by its command-line name.

    Raises:
        UsageError: If pairs is missing for a setter or given for another gadget.
    """
    if name == "setter":
        if pairs is None:
            raise UsageError("setter needs the number of coding pairs")
        return variable_setter(pairs)
    if pairs is not None:
        raise UsageError(f"{name} takes no pair count")
    return {"inverter": inverter, "ring": ring, "or-gate": or_gate}[name]()


def transcript(g: Gadget, up_to_permutation: bool) -> list[str]:
    ext = extender(g)
    lines = []
    for pattern in product(range(COLORS), repeat=g.predicate.arity):
        if up_to_permutation and canonical_pattern(pattern) != pattern:
            continue
        admitted = g.predicate.admits(pattern)
        extends = ext.extendable(pattern)
        lines.append(
            f"{''.join(map(str, pattern))} admitted={'yes' if admitted else 'no'} "
            f"extends={'yes' if extends else 'no'}"
        )
    return lines


def run_verify(args: argparse.Namespace) -> int:
    g = gadget_named(args.name, args.pairs)
    verdict = verify_gadget(g, pattern_cap=args.cap)
    if args.transcript:
        for line in transcript(g, verdict.up_to_permutation):
            print(line)
    scope = "classes up to colour permutation" if verdict.up_to_permutation else "boundary patterns"
    if verdict.passed:
        print(f"{g.name}: PASS ({verdict.checked} {scope})")
    elif verdict.failed_part is not None:
        print(f"{g.name}: FAIL (part {verdict.failed_part})")
    else:
        print(f"{g.name}: FAIL at pattern {verdict.counterexample} (extendable={verdict.extendable})")
    write_report(ReportDocument(command="gadget verify", gadgets=[GadgetModel.of(verdict, g)]), args.json)
    return ExitCode.OK if verdict.passed else ExitCode.NEGATIVE


def run_build(args: argparse.Namespace) -> int:
    phi = parse_dimacs(read_text(args.cnf), args.cnf)
    record = reduce_3sat(phi)
    model = CodingModel.of(record)
    print(
        f"{phi.variable_count} variables, {len(phi.clauses)} clauses -> "
        f"{record.graph.vertex_count} vertices, {record.graph.edge_count} edges"
    )
    coloring = None
    if args.coloring:
        coloring = find_edge_coloring(record.graph)
        model.colorable = coloring is not None
        if coloring is None:
            print("not 3-edge-colourable: the formula is unsatisfiable")
        else:
            assignment = coloring_to_assignment(coloring, record)
            model.assignment = list(assignment.values)
            print("3-edge-colourable; satisfying assignment:")
            print(emit_assignment(assignment.values), end="")
    if args.out is not None:
        write_text(args.out, emit_edge_list(record.graph, coloring))
    write_report(ReportDocument(command="gadget build", codings=[model]), args.json)
    return ExitCode.NEGATIVE if coloring is None and args.coloring else ExitCode.OK
