#!/usr/bin/env python3
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

import pandas as pd
import requests
import yaml

from degenlab.algebra.superalgebra import SuperAlgebra
from degenlab.catalog import default_catalog, parse_variety
from degenlab.certificates.check import ASSERTED_ONLY, INVALID, VALID, CertificateVerdict, check_certificate
from degenlab.cli.report import (
    EXIT_DATA,
    EXIT_GRAPH,
    EXIT_USAGE,
    FAIL,
    PASS,
    RunReport,
)
from degenlab.cli.reproduce import burde_text, render_summary, reproduce_paper, summary_frame
from degenlab.config import load_settings
from degenlab.degeneration.verify import verify_degeneration
from degenlab.errors import (
    AmbiguousName,
    DegenlabError,
    DimensionMismatch,
    FixtureError,
    GraphError,
    MalformedAlgebra,
    MalformedCertificate,
    ParseError,
    RaggedInput,
    ReductionUndefined,
    SingularWitness,
    UnknownName,
    UsageError,
)
from degenlab.graph.build import build_graph
from degenlab.graph.components import component_discrepancies, components
from degenlab.graph.dot import CLOSURE, MODES, PRIMARY, emit_dot
from degenlab.graph.model import primary_edges
from degenlab.identities.jordan import check_jordan_super
from degenlab.invariants.profile import invariant_profile
from degenlab.io_tools import dumps_json, is_url
from degenlab.io_tools.schemas import AlgebraDocument, CertificateDocument, WitnessDocument, load_document

logger = logging.getLogger(__name__)

DATA_ERRORS = (
    FileNotFoundError,
    yaml.YAMLError,
    requests.RequestException,
    FixtureError,
    ParseError,
    MalformedAlgebra,
    MalformedCertificate,
    DimensionMismatch,
    SingularWitness,
    RaggedInput,
)
USAGE_ERRORS = (UsageError, UnknownName, AmbiguousName)


class _Parser(argparse.ArgumentParser):
    """Reports usage errors as UsageError instead of exiting."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _variety(text: str):
    try:
        return parse_variety(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _catalog(args):
    return default_catalog(args.catalog)


def _load_algebra(ref: str, catalog, raw: bool = False) -> SuperAlgebra:
    """An algebra document (file or URL) or a catalog name. raw applies to documents only."""
    if is_url(ref) or Path(ref).is_file():
        return load_document(ref, AlgebraDocument).to_algebra(raw=True if raw else None)
    return catalog.get(ref).algebra


def handle_check_jordan_command(args) -> RunReport:
    A = _load_algebra(args.algebra, _catalog(args), args.raw)
    name = A.name or args.algebra
    result = check_jordan_super(A)
    report = RunReport("check-jordan")
    report.add("jordan", name, PASS if result.passed else FAIL,
               "" if result.passed else result.witness.kind)
    if args.format == "json":
        report.output = dumps_json({"algebra": name, **result.to_dict()}).rstrip("\n")
    elif result.passed:
        report.output = f"{name}: pass"
    else:
        report.output = f"{name}: fail\n{dumps_json(result.witness.to_dict()).rstrip()}"
    report.settle()
    return report


def handle_invariants_command(args) -> RunReport:
    A = _load_algebra(args.algebra, _catalog(args), args.raw)
    profile = invariant_profile(A)
    report = RunReport("invariants")
    report.add("invariants", A.name or args.algebra, PASS)
    if args.format == "json":
        report.output = dumps_json(profile.to_dict()).rstrip("\n")
    else:
        lines = [
            f"algebra: {profile.name}",
            f"type: {profile.dims}",
            f"power profile: {profile.power_profile.to_list()}",
            f"derivation dimension: {profile.derivation_dim}",
            f"associative: {'yes' if profile.associative else 'no'}",
        ]
        lines.extend(f"c_({i},{j}): {burde_text(profile.burde(i, j))}" for i, j in ((1, 1), (1, 2), (2, 2)))
        lines.append(f"annex power profile: {profile.annex_power_profile.to_list()}")
        report.output = "\n".join(lines)
    report.settle()
    return report


def handle_verify_deg_command(args) -> RunReport:
    doc = load_document(args.witness, WitnessDocument)
    w = doc.to_witness()
    verdict = verify_degeneration(w, _catalog(args))
    report = RunReport("verify-deg")
    report.add("witness", f"{w.source} -> {w.target}", PASS if verdict.verified else FAIL, verdict.status)
    if args.format == "json":
        report.output = dumps_json(verdict.to_dict(args.show_transport, w.variety)).rstrip("\n")
    else:
        text = str(verdict)
        if args.show_transport and verdict.transport is not None:
            text += "\n" + dumps_json(verdict.transport.to_dict(*w.variety)).rstrip("\n")
        report.output = text
    report.settle()
    return report


def handle_verify_nondeg_command(args) -> RunReport:
    catalog = _catalog(args)
    doc = load_document(args.certificate, CertificateDocument)
    variety = tuple(doc.variety) if doc.variety else catalog.resolve_variety(doc.source, doc.target)
    pair = doc.to_pair(variety)
    A = catalog.algebra(pair.source, variety)
    B = catalog.algebra(pair.target, variety)
    try:
        verdict = check_certificate(A, B, pair.certificate)
    except ReductionUndefined as e:
        verdict = CertificateVerdict(INVALID, reason=str(e))
    status = {VALID: PASS, ASSERTED_ONLY: ASSERTED_ONLY}.get(verdict.status, FAIL)
    report = RunReport("verify-nondeg")
    report.add("certificate", pair.describe(), status, verdict.reason or verdict.status)
    if args.format == "json":
        report.output = dumps_json({"pair": pair.describe(), **verdict.to_dict()}).rstrip("\n")
    else:
        text = f"{pair.describe()}: {verdict.status}"
        if verdict.reason:
            text += f" ({verdict.reason})"
        report.output = text
    report.settle(args.allow_external)
    return report


def handle_graph_command(args) -> RunReport:
    g = build_graph(args.variety, _catalog(args), auto=args.auto, allow_external=not args.no_external)
    report = RunReport("graph")
    edges = primary_edges(g) if args.mode == PRIMARY else None
    report.add("graph", f"variety {args.variety[0]},{args.variety[1]}", PASS,
               f"{len(g.nodes)} nodes, {len(edges if edges is not None else g.edges)} edges")
    if args.format == "dot":
        report.output = emit_dot(g, args.mode).rstrip("\n")
    else:
        report.output = dumps_json(g.to_dict(edges)).rstrip("\n")
    report.settle()
    return report


def handle_components_command(args) -> RunReport:
    catalog = _catalog(args)
    g = build_graph(args.variety, catalog, allow_external=not args.no_external)
    result = components(g)
    published = catalog.published(args.variety)
    discrepancies = component_discrepancies(result, published.components) if published else []
    report = RunReport("components")
    report.add("components", f"variety {args.variety[0]},{args.variety[1]}", PASS,
               f"{len(result.components)} components")
    if args.format == "json":
        data = {"variety": list(args.variety), **result.to_dict(),
                "errata": [str(d) for d in discrepancies]}
        report.output = dumps_json(data).rstrip("\n")
    else:
        frame = pd.DataFrame([{"generator": rigid, "closure": ", ".join(members)}
                              for rigid, members in result.components])
        lines = [frame.to_string(index=False), "", f"rigid: {', '.join(result.rigid_set)}"]
        lines.extend(f"suspected erratum: {d}" for d in discrepancies)
        report.output = "\n".join(lines)
    report.settle()
    return report


def handle_catalog_command(args) -> RunReport:
    catalog = _catalog(args)
    report = RunReport(f"catalog {args.catalog_subcommand}")
    if args.catalog_subcommand == "list":
        varieties = [args.variety] if args.variety else catalog.varieties
        entries = [e for v in varieties for e in catalog.list(v)]
        for entry in entries:
            report.add("catalog", entry.qualified_name, PASS)
        rows = [{"name": e.name, "variety": f"{e.variety[0]},{e.variety[1]}", "aut_dim": e.expected_aut_dim,
                 "type": e.expected_type, "source": e.source} for e in entries]
        if args.format == "json":
            report.output = dumps_json(rows).rstrip("\n")
        else:
            report.output = pd.DataFrame(rows, columns=["name", "variety", "aut_dim", "type", "source"]) \
                .to_string(index=False)
    elif args.catalog_subcommand == "show":
        entry = catalog.get(args.name, args.variety)
        report.add("catalog", entry.qualified_name, PASS)
        if args.json or args.format == "json":
            report.output = dumps_json(entry.to_dict()).rstrip("\n")
        else:
            lines = [f"{entry.name} ({entry.variety[0]},{entry.variety[1]})  [{entry.source}]",
                     entry.algebra.describe(),
                     f"aut dim: {entry.expected_aut_dim}",
                     f"type: {entry.expected_type}"]
            lines.extend(f"c_({i},{j}): {e.computed}" + (f" (printed {e.printed}, {e.flag})" if e.flag else "")
                         for (i, j), e in sorted(entry.expected_burde.items()))
            report.output = "\n".join(lines)
    elif args.catalog_subcommand == "export":
        written = catalog.export(args.dir)
        for path in written:
            report.add("export", str(path), PASS)
        report.output = f"Wrote {len(written)} files to {args.dir}"
    else:
        raise UsageError("catalog needs one of: list, show, export")
    report.settle()
    return report


def handle_reproduce_command(args) -> RunReport:
    settings = load_settings(args.settings)
    varieties = [args.variety] if args.variety else None
    report = reproduce_paper(_catalog(args), settings, varieties, args.expect_errata, args.allow_external)
    if args.format == "json":
        data = report.to_dict()
        data["summary"] = summary_frame(report).to_dict(orient="records")
        report.output = dumps_json(data).rstrip("\n")
    else:
        report.output = render_summary(report)
    return report


HANDLERS = {
    "check-jordan": handle_check_jordan_command,
    "invariants": handle_invariants_command,
    "verify-deg": handle_verify_deg_command,
    "verify-nondeg": handle_verify_nondeg_command,
    "graph": handle_graph_command,
    "components": handle_components_command,
    "catalog": handle_catalog_command,
    "reproduce-paper": handle_reproduce_command,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="degenlab",
        description="degenlab - degenerations of three-dimensional Jordan superalgebras",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log INFO (-v) or DEBUG (-vv) messages to stderr")
    parser.add_argument("--catalog", type=str, default=None,
                        help="Catalog directory or base URL (default: $DEGENLAB_CATALOG or the bundled data)")
    parser.add_argument("--settings", type=str, default=None,
                        help="Settings file (default: $DEGENLAB_SETTINGS or the bundled settings.yaml)")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    def text_or_json(p):
        p.add_argument("--format", "-f", choices=["text", "json"], default="text", help="Output format")

    check_parser = subparsers.add_parser("check-jordan", help="Check the Jordan superalgebra identity")
    check_parser.add_argument("algebra", type=str, help="Algebra document (file or URL) or catalog name")
    check_parser.add_argument("--raw", action="store_true",
                              help="Take the document's products as listed, without the supercommutative completion")
    text_or_json(check_parser)

    invariants_parser = subparsers.add_parser("invariants", help="Print the invariant profile of an algebra")
    invariants_parser.add_argument("algebra", type=str, help="Algebra document (file or URL) or catalog name")
    invariants_parser.add_argument("--raw", action="store_true",
                                   help="Take the document's products as listed, without the supercommutative completion")
    text_or_json(invariants_parser)

    deg_parser = subparsers.add_parser("verify-deg", help="Verify a degeneration witness")
    deg_parser.add_argument("witness", type=str, help="Witness document")
    deg_parser.add_argument("--show-transport", action="store_true",
                            help="Include the transported structure constants")
    text_or_json(deg_parser)

    nondeg_parser = subparsers.add_parser("verify-nondeg", help="Check a non-degeneration certificate")
    nondeg_parser.add_argument("certificate", type=str, help="Certificate document")
    nondeg_parser.add_argument("--allow-external", action="store_true",
                               help="Accept ExternalFact certificates (exit 0 instead of 2)")
    text_or_json(nondeg_parser)

    graph_parser = subparsers.add_parser("graph", help="Assemble the degeneration graph of a variety")
    graph_parser.add_argument("--variety", type=_variety, required=True, help="Variety as m,n")
    graph_parser.add_argument("--mode", choices=list(MODES), default=PRIMARY,
                              help=f"{PRIMARY}: transitive reduction; {CLOSURE}: every degeneration")
    graph_parser.add_argument("--format", "-f", choices=["dot", "json"], default="dot", help="Output format")
    graph_parser.add_argument("--auto", action="store_true",
                              help="Settle pairs the fixtures leave open with the invariant toolkit")
    graph_parser.add_argument("--no-external", action="store_true", help="Ignore ExternalFact certificates")

    components_parser = subparsers.add_parser("components", help="Rigid algebras and irreducible components")
    components_parser.add_argument("--variety", type=_variety, required=True, help="Variety as m,n")
    components_parser.add_argument("--format", "-f", choices=["text", "json"], default="json",
                                   help="Output format")
    components_parser.add_argument("--no-external", action="store_true", help="Ignore ExternalFact certificates")

    catalog_parser = subparsers.add_parser("catalog", help="Catalog utility commands")
    catalog_subparsers = catalog_parser.add_subparsers(dest="catalog_subcommand", help="Available catalog utilities")
    list_parser = catalog_subparsers.add_parser("list", help="List the algebras of a variety")
    list_parser.add_argument("--variety", type=_variety, default=None, help="Variety as m,n (default: all)")
    text_or_json(list_parser)
    show_parser = catalog_subparsers.add_parser("show", help="Show one catalog algebra")
    show_parser.add_argument("name", type=str, help="Name, optionally qualified as name@m,n")
    show_parser.add_argument("--variety", type=_variety, default=None, help="Variety as m,n")
    show_parser.add_argument("--json", action="store_true", help="Same as --format json")
    text_or_json(show_parser)
    export_parser = catalog_subparsers.add_parser("export", help="Write every fixture as JSON")
    export_parser.add_argument("--dir", type=str, required=True, help="Output directory")

    reproduce_parser = subparsers.add_parser("reproduce-paper", help="Run every reproduction suite")
    reproduce_parser.add_argument("--variety", type=_variety, default=None, help="Restrict to one variety")
    reproduce_parser.add_argument("--expect-errata", action=argparse.BooleanOptionalAction, default=None,
                                  help="Count flagged errata as acknowledged (default from settings)")
    reproduce_parser.add_argument("--allow-external", action=argparse.BooleanOptionalAction, default=True,
                                  help="Count ExternalFact certificates as passing")
    text_or_json(reproduce_parser)

    return parser


def run(argv: Optional[List[str]] = None) -> RunReport:
    """
    Parse argv, dispatch and print the command output.

    Returns:
        RunReport: the verdicts and exit code of the command
    """
    parser = build_parser()
    command = "degenlab"
    try:
        args = parser.parse_args(argv)
        command = args.command or command
        configure_logging(args.verbose)
        if args.command is None:
            raise UsageError("a command is required")
        report = HANDLERS[args.command](args)
    except GraphError as e:
        print(f"Error: {e}", file=sys.stderr)
        return RunReport(command, exit_code=EXIT_GRAPH)
    except USAGE_ERRORS as e:
        print(f"Error: {e}", file=sys.stderr)
        if isinstance(e, UsageError):
            parser.print_usage(sys.stderr)
        return RunReport(command, exit_code=EXIT_USAGE)
    except DATA_ERRORS as e:
        print(f"Error: {e}", file=sys.stderr)
        return RunReport(command, exit_code=EXIT_DATA)
    except DegenlabError as e:
        logger.error(f"{command} failed: {e}")
        return RunReport(command, exit_code=EXIT_DATA)
    if report.output:
        print(report.output)
    return report


def main():
    sys.exit(run().exit_code)


if __name__ == "__main__":
    main()
