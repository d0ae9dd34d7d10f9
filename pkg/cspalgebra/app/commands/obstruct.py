"""`obstruct`: tree-shaped obstructions for an instance.

Without --lift the command looks for an unsolvable acyclic lift; when the
instance is arc-consistent it audits closed paths and builds a cycle
obstruction from the first one that fails. With --lift it checks a given
lift instead.
"""

import argparse

from cspalgebra.domain.models import Lift
from cspalgebra.engine.consistency import cycle_consistency_audit, good_witness, is_acyclic
from cspalgebra.engine.core import find_homomorphism
from cspalgebra.engine.obstruction import cycle_obstruction_lift, unsolvable_acyclic_lift, verify_lift
from cspalgebra.formats import ObstructionModel, ReportDocument, emit_lift, parse_lift

from ..exit_codes import ExitCode
from ..inputs import load_instance, load_template, read_text, write_report, write_text


def register(sub: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = sub.add_parser("obstruct", parents=[common], help="find or check an acyclic obstruction")
    p.add_argument("template", help="template file or fixture name")
    p.add_argument("instance", help="instance file")
    p.add_argument("--lift", metavar="PATH", default=None, help="check this lift file instead of searching")
    p.add_argument("--max-len", type=int, default=None, help="longest closed path audited")
    p.add_argument("--out", metavar="PATH", default=None, help="write the lift found here")
    p.set_defaults(handler=run)


def _check_lift(args: argparse.Namespace) -> int:
    template = load_template(args.template)
    x = load_instance(args.instance, template.structure.signature)
    parsed = parse_lift(read_text(args.lift), x, template.structure.signature, args.lift)
    lift = Lift(parsed.instance, parsed.lift_map, acyclic=is_acyclic(parsed.instance))
    if not verify_lift(lift, x):
        print("not a lift: the map is not a homomorphism onto the instance")
        return ExitCode.NEGATIVE
    solvable = find_homomorphism(lift.instance, template.structure, order=args.seed_order) is not None
    shape = "acyclic" if lift.acyclic else "cyclic"
    verdict = "solvable" if solvable else "unsolvable"
    print(f"lift of {lift.instance.variable_count} variables: {shape}, {verdict}")
    return ExitCode.OK if lift.acyclic and not solvable else ExitCode.NEGATIVE


def _emit(lift: Lift, path: str | None) -> None:
    if path is not None:
        write_text(path, emit_lift(lift))


def run(args: argparse.Namespace) -> int:
    if args.lift is not None:
        return _check_lift(args)
    template = load_template(args.template)
    s = template.structure
    x = load_instance(args.instance, s.signature)

    lift = unsolvable_acyclic_lift(x, s, node_cap=args.cap)
    if lift is not None:
        print(f"not arc-consistent: unsolvable acyclic lift of {lift.instance.variable_count} variables")
        _emit(lift, args.out)
        model = ObstructionModel(
            kind="unsolvable-acyclic-lift",
            lift_variables=lift.instance.variable_count,
            lift_map=list(lift.lift_map),
        )
        write_report(ReportDocument(command="obstruct", obstructions=[model]), args.json)
        return ExitCode.OK

    witness = good_witness(x, s)
    assert witness is not None
    audit = cycle_consistency_audit(x, s, witness, args.max_len)
    if audit.passed or audit.path is None:
        print(f"arc-consistent; cycle audit {audit.label} over {audit.cycles_checked} closed paths")
        model = ObstructionModel(kind="arc-consistent", note=audit.label)
        write_report(ReportDocument(command="obstruct", obstructions=[model]), args.json)
        return ExitCode.NEGATIVE

    obstruction = cycle_obstruction_lift(x, s, audit.path, node_cap=args.cap)
    print(
        f"value {audit.value} of variable {audit.path.start} does not return along a closed path of "
        f"length {len(audit.path)}: solvable acyclic lift of "
        f"{obstruction.lift.instance.variable_count} variables with no solution constant on its "
        f"fiber of {len(obstruction.fiber)}"
    )
    _emit(obstruction.lift, args.out)
    model = ObstructionModel(
        kind="cycle-obstruction",
        lift_variables=obstruction.lift.instance.variable_count,
        lift_map=list(obstruction.lift.lift_map),
        distinguished=obstruction.distinguished,
        fiber=list(obstruction.fiber),
        derived_relations=list(obstruction.materialized),
        note=audit.label,
    )
    write_report(ReportDocument(command="obstruct", obstructions=[model]), args.json)
    return ExitCode.OK
