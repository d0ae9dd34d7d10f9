"""`solve`: decide an instance with the strategies its template allows."""

import argparse

from cspalgebra.domain_service import solve
from cspalgebra.formats import ReportDocument, SolutionModel, StructureModel, emit_assignment

from ..exit_codes import ExitCode
from ..inputs import load_instance, load_template, write_report


def register(sub: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = sub.add_parser("solve", parents=[common], help="solve an instance over a template")
    p.add_argument("template", help="template file or fixture name")
    p.add_argument("instance", help="instance file")
    p.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    template = load_template(args.template)
    x = load_instance(args.instance, template.structure.signature)
    outcome = solve(x, template.structure, order=args.seed_order, cap=args.cap)
    if outcome.solution is not None:
        print(f"solved by {outcome.strategy}")
        print(emit_assignment(outcome.solution.values, template.labels), end="")
    else:
        print(f"unsolvable (decided by {outcome.strategy})")
    write_report(
        ReportDocument(
            command="solve",
            solutions=[
                SolutionModel(
                    template_id=template.name,
                    strategy=outcome.strategy,
                    attempted=list(outcome.attempted),
                    solved=outcome.solved,
                    assignment=list(outcome.solution.values) if outcome.solution is not None else None,
                    template=StructureModel.of(template.structure),
                    instance=StructureModel.of(x),
                )
            ],
        ),
        args.json,
    )
    return ExitCode.OK if outcome.solved else ExitCode.NEGATIVE
