"""`reduce`: compile an instance through a construction chain."""

import argparse
from pathlib import Path

from cspalgebra.domain_service import solve
from cspalgebra.formats import ReductionModel, ReportDocument, emit_assignment, emit_instance, load_chain

from ..exit_codes import ExitCode
from ..inputs import load_instance, load_template, read_text, write_report, write_text


def register(sub: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = sub.add_parser("reduce", parents=[common], help="compile an instance to one over the chain's template")
    p.add_argument("chain", help="chain JSON document")
    p.add_argument("instance", help="instance over the constructed structure")
    p.add_argument("--out", metavar="PATH", default=None, help="write the compiled instance here")
    p.add_argument(
        "--solve", action="store_true", help="solve the compiled instance and pull the solution back"
    )
    p.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    base = Path(args.chain).parent
    chain = load_chain(
        read_text(args.chain), lambda ref: load_template(ref, base).structure, source=args.chain
    )
    x = load_instance(args.instance, chain.result.signature)
    reduction = chain.compile(x)
    certificate = reduction.certificate
    print(
        f"{certificate.kind}: {certificate.source_variable_count} -> "
        f"{certificate.output_variable_count} variables, degree {certificate.max_input_degree} -> "
        f"{certificate.max_output_degree} (multiplier {certificate.degree_multiplier})"
    )
    text = emit_instance(reduction.output)
    if args.out is not None:
        write_text(args.out, text)
    elif not args.solve:
        print(text, end="")
    write_report(ReportDocument(command="reduce", reductions=[ReductionModel.of(certificate)]), args.json)
    if not args.solve:
        return ExitCode.OK

    outcome = solve(reduction.output, chain.template, order=args.seed_order, cap=args.cap)
    if outcome.solution is None:
        print("compiled instance is unsolvable")
        return ExitCode.NEGATIVE
    print(emit_assignment(reduction.pullback(outcome.solution).values), end="")
    return ExitCode.OK
