"""`classify`: dichotomy verdicts for one or more templates."""

import argparse

from cspalgebra.domain.models import CheckResult, Status, Verdict
from cspalgebra.domain_service import classify_many
from cspalgebra.formats import ReportDocument, VerdictModel

from ..exit_codes import ExitCode
from ..inputs import load_template, write_report
from ..settings import settings


def register(sub: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = sub.add_parser("classify", parents=[common], help="classify templates")
    p.add_argument("templates", nargs="+", metavar="TEMPLATE", help="template file or fixture name")
    p.add_argument("--jobs", type=int, default=None, help="templates classified in parallel")
    p.set_defaults(handler=run)


def _check(label: str, check: CheckResult) -> str:
    line = f"  {label}: {check.status.value}"
    return f"{line} ({check.note})" if check.note else line


def render(v: Verdict) -> str:
    lines = [
        v.template_id,
        _check("tractable", v.tractable),
        _check("width 1", v.width1),
        _check("dual discriminator", v.dual_discriminator),
    ]
    if v.boolean.bucket.number is not None:
        via = f" via {v.boolean.operation}" if v.boolean.operation else ""
        lines.append(f"  boolean bucket: {v.boolean.bucket.number} ({v.boolean.bucket.value}{via})")
    if v.graph is not None:
        lines.append(
            f"  graph: bipartite {'yes' if v.graph.bipartite else 'no'}, core of {v.graph.core_size} vertices"
        )
    if v.smooth_digraph is not None:
        shape = "a union of cycles" if v.smooth_digraph.core_is_cycle_union else "not a union of cycles"
        lines.append(f"  smooth digraph: core of {v.smooth_digraph.core_size} vertices, {shape}")
    lines += [f"  label: {label}" for label in v.labels]
    lines += [f"  {e.kind}: {e.description}" for e in v.evidence if e.kind != "preprocessing"]
    return "\n".join(lines)


def run(args: argparse.Namespace) -> int:
    inputs = [load_template(ref) for ref in args.templates]
    verdicts = classify_many(
        [(t.name, t.structure) for t in inputs],
        jobs=args.jobs or settings.jobs,
        cap=args.cap,
    )
    for v in verdicts:
        print(render(v))
    write_report(
        ReportDocument(
            command="classify",
            verdicts=[VerdictModel.of(v, t.structure, t.tags) for v, t in zip(verdicts, inputs, strict=True)],
        ),
        args.json,
    )
    statuses = {v.tractable.status for v in verdicts}
    if Status.NO in statuses:
        return ExitCode.NEGATIVE
    if Status.UNKNOWN in statuses:
        return ExitCode.CAP
    return ExitCode.OK
