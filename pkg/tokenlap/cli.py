import argparse
import logging
import sys
from typing import List, Optional, Tuple

from tokenlap import __version__
from tokenlap.combinatorics import labels_of
from tokenlap.config import get_settings
from tokenlap.corpus import ATLAS_MAX_ORDER, atlas_graph6
from tokenlap.errors import FamilyParameterError, TokenLapError
from tokenlap.generators import (
    render_closed_form,
    render_discrepancy,
    render_identities,
    render_spectrum,
    render_token_graph,
)
from tokenlap.graphs.core import MAX_BASE_ORDER, Graph
from tokenlap.graphs.families import (
    double_graph,
    family_graph,
    johnson_graph,
    odd_graph,
    star_graph,
    supported_families,
)
from tokenlap.graphs.graph6 import parse_graph6, read_graph6_lines, write_graph6
from tokenlap.helpers import save_report_to_file, to_json
from tokenlap.identities import run_identities
from tokenlap.scan import HALF, report_to_json_lines, scan
from tokenlap.spectral.closed_forms import (
    DoubledJohnsonLaplacianValues,
    closed_form_from_text,
    closed_form_spectrum,
    supported_closed_forms,
)
from tokenlap.spectral.core import (
    adjacency_spectrum,
    algebraic_connectivity,
    complement_algebraic_connectivity,
    spectrum_contains,
    spectrum_of,
)
from tokenlap.spectral.pairing import integer_eigenvalue_bound, pairing_decomposition
from tokenlap.spectral.stars import doubled_johnson_discrepancy
from tokenlap.tokens import token_graph
from tokenlap.types import DiscrepancyReport, Spectrum

logger = logging.getLogger("tokenlap")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def version(**kwargs):
    return __version__


def token_count(value: str):
    if value == HALF:
        return value
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or '{HALF}', got {value!r}")


def add_input(parser: argparse.ArgumentParser, default_file: Optional[str] = None) -> None:
    source = parser.add_mutually_exclusive_group(required=default_file is None)
    source.add_argument("--graph6", type=str, help="Graph as a graph6 record")
    source.add_argument(
        "--file",
        type=str,
        default=default_file,
        help="File with graph6 records, one per line ('-' for stdin)",
    )
    source.add_argument(
        "--family",
        type=str,
        help=f"Graph family as name:params, one of the supported: {supported_families}",
    )


def add_output(parser: argparse.ArgumentParser, formats: bool = True) -> None:
    parser.add_argument("--out", type=str, default=None, help="Target path to save the report")
    if formats:
        parser.add_argument("--format", choices=["json", "text"], default="json", help="Output format")


def cli() -> argparse.ArgumentParser:
    tl_cli = argparse.ArgumentParser(
        prog="tokenlap",
        description="Token graphs of small graphs: Laplacian spectra, exact matrix identities "
        "and the algebraic connectivity scan",
    )
    tl_cli.add_argument("-v", action="store_true", default=False, help="Verbose mode")
    tl_cli.add_argument("--version", action="version", version=f"%(prog)s {version()}")
    commands = tl_cli.add_subparsers(dest="command", metavar="<subcommand>")
    commands.required = True

    build = commands.add_parser("build", help="Emit F_k(G) as graph6 with its vertex-subset legend")
    add_input(build)
    build.add_argument("--k", type=int, required=True)
    add_output(build)

    spectrum = commands.add_parser("spectrum", help="Laplacian spectrum of G or of F_k(G)")
    add_input(spectrum)
    spectrum.add_argument("--k", type=int, default=None, help="Token count, omit for G itself")
    spectrum.add_argument(
        "--matrix", choices=["laplacian", "adjacency"], default="laplacian", help="Matrix to diagonalize"
    )
    add_output(spectrum)

    verify = commands.add_parser("verify", help="Exact identity suite between F_h(G) and F_k(G)")
    add_input(verify)
    verify.add_argument("--h", type=int, default=1)
    verify.add_argument("--k", type=token_count, required=True)
    verify.add_argument("--jobs", type=int, default=None, help="Worker processes for --file")
    verify.add_argument("--progress", action="store_true", default=False)
    add_output(verify)

    contain = commands.add_parser("contain", help="Check spec F_h(G) inside spec F_k(G)")
    add_input(contain)
    contain.add_argument("--h", type=int, default=1)
    contain.add_argument("--k", type=int, required=True)
    contain.add_argument("--tol", type=float, default=None)
    add_output(contain, formats=False)

    pairing = commands.add_parser("pairing", help="Pair the spectra of F_k(G) and F_k(complement)")
    add_input(pairing)
    pairing.add_argument("--k", type=int, required=True)
    pairing.add_argument("--tol", type=float, default=None)
    add_output(pairing, formats=False)

    closed = commands.add_parser("closed-form", help="Closed-form spectrum of a family")
    closed.add_argument(
        "name",
        type=str,
        help=f"name:params, one of the supported: {supported_closed_forms}",
    )
    closed.add_argument(
        "--compare", action="store_true", default=False, help="Compare with the numeric spectrum"
    )
    add_output(closed)

    alpha = commands.add_parser("alpha", help="Algebraic connectivity of G and of F_k(G)")
    add_input(alpha)
    alpha.add_argument("--k", type=token_count, default=None)
    alpha.add_argument("--tol", type=float, default=None)
    add_output(alpha)

    scan_cmd = commands.add_parser("scan", help="Algebraic connectivity scan over a graph6 corpus")
    add_input(scan_cmd, default_file="-")
    scan_cmd.add_argument("--k", type=token_count, default=2, help=f"Token count or '{HALF}'")
    scan_cmd.add_argument("--tol", type=float, default=None)
    scan_cmd.add_argument("--jobs", type=int, default=None)
    scan_cmd.add_argument("--progress", action="store_true", default=False)
    add_output(scan_cmd, formats=False)

    atlas = commands.add_parser("atlas", help="Write every graph up to 7 vertices as graph6")
    atlas.add_argument("--max-n", type=int, default=ATLAS_MAX_ORDER)
    atlas.add_argument("--connected", action="store_true", default=False)
    add_output(atlas, formats=False)
    return tl_cli


def read_lines(path: str) -> Tuple[List[str], str]:
    if path == "-":
        return sys.stdin.read().splitlines(), "stdin"
    with open(path) as f:
        return f.read().splitlines(), path


def load_graph(args) -> Tuple[Graph, str]:
    if args.graph6 is not None:
        return parse_graph6(args.graph6), args.graph6
    if args.family is not None:
        return family_graph(args.family), args.family
    lines, corpus = read_lines(args.file)
    records = list(read_graph6_lines(lines))
    if len(records) != 1:
        raise FamilyParameterError(f"Expected a single graph6 record in {corpus}, found {len(records)}")
    return records[0][1], write_graph6(records[0][1])


def load_corpus(args) -> Tuple[List[str], str]:
    if args.graph6 is None and args.family is None:
        return read_lines(args.file)
    g, source = load_graph(args)
    return [write_graph6(g)], source


def emit(text: str, out: Optional[str]) -> None:
    if out:
        save_report_to_file(text, out)
    else:
        sys.stdout.write(text)


def spectrum_json(spectrum: Spectrum, **extra) -> str:
    return to_json(dict(extra, dimension=spectrum.dimension, groups=spectrum.groups)) + "\n"


def run_build(args) -> int:
    g, source = load_graph(args)
    tg = token_graph(g, args.k)
    if args.format == "text":
        emit(render_token_graph(tg, source), args.out)
        return EXIT_OK
    graph = tg.graph
    data = dict(source=source, k=args.k, vertices=graph.n, edges=graph.edge_count, regular=graph.is_regular())
    if graph.n <= MAX_BASE_ORDER:
        data["graph6"] = write_graph6(graph)
    else:
        data["edge_list"] = list(graph.edges())
    data["legend"] = [labels_of(mask) for mask in tg.index.masks]
    emit(to_json(data) + "\n", args.out)
    return EXIT_OK


def run_spectrum(args) -> int:
    g, source = load_graph(args)
    target = g if args.k is None else token_graph(g, args.k).graph
    spectrum = spectrum_of(target) if args.matrix == "laplacian" else adjacency_spectrum(target)
    if args.format == "text":
        title = source if args.k is None else f"F_{args.k}({source})"
        emit(render_spectrum(spectrum, f"{args.matrix} spectrum of {title}"), args.out)
    else:
        emit(spectrum_json(spectrum, graph=source, k=args.k, matrix=args.matrix), args.out)
    return EXIT_OK


def run_verify(args) -> int:
    if args.file is not None:
        lines, corpus = read_lines(args.file)
        report = scan(lines, "identities", args.k, h=args.h, jobs=args.jobs, progress=args.progress, corpus=corpus)
        emit(report_to_json_lines(report), args.out)
        return EXIT_VIOLATION if report.summary.violations else EXIT_OK
    g, _ = load_graph(args)
    k = g.n // 2 if args.k == HALF else args.k
    reports = run_identities(g, args.h, k)
    if args.format == "text":
        emit(render_identities(reports), args.out)
    else:
        emit("".join(to_json(report) + "\n" for report in reports), args.out)
    return EXIT_OK if all(report.holds for report in reports) else EXIT_VIOLATION


def run_contain(args) -> int:
    g, source = load_graph(args)
    tol = args.tol if args.tol is not None else get_settings().containment_tol
    if not 1 <= args.h <= args.k:
        raise FamilyParameterError(f"Need 1 <= h <= k, got h={args.h}, k={args.k}")
    small = spectrum_of(token_graph(g, args.h).graph)
    big = spectrum_of(token_graph(g, args.k).graph)
    contained = spectrum_contains(small, big, tol)
    emit(to_json(dict(graph=source, h=args.h, k=args.k, tolerance=tol, contained=contained)) + "\n", args.out)
    return EXIT_OK if contained else EXIT_VIOLATION


def run_pairing(args) -> int:
    g, source = load_graph(args)
    result = pairing_decomposition(g, args.k, tol=args.tol)
    bound = integer_eigenvalue_bound(g, args.k)
    emit(to_json(dict(graph=source, pairing=result, integer_bound=bound)) + "\n", args.out)
    return EXIT_OK if result.sums_match_johnson and bound.holds else EXIT_VIOLATION


def numeric_counterpart(spec) -> Spectrum:
    if spec.name == "johnson-laplacian":
        return spectrum_of(johnson_graph(spec.n, spec.k))
    if spec.name == "johnson-adjacency":
        return adjacency_spectrum(johnson_graph(spec.n, spec.k))
    if spec.name == "odd-adjacency":
        return adjacency_spectrum(odd_graph(spec.k))
    if spec.name == "double-odd-laplacian":
        return spectrum_of(double_graph(odd_graph(spec.k)))
    if spec.name == "double-odd-adjacency":
        return adjacency_spectrum(double_graph(odd_graph(spec.k)))
    return spectrum_of(token_graph(star_graph(2 * spec.k), spec.k).graph)


def compare_closed_form(spec, tol: float = 1e-8) -> DiscrepancyReport:
    if isinstance(spec, DoubledJohnsonLaplacianValues):
        return doubled_johnson_discrepancy(spec.n, spec.k, tol)
    closed = closed_form_spectrum(spec).to_spectrum()
    numeric = numeric_counterpart(spec)
    divergent = not numeric.matches(closed, tol)
    return DiscrepancyReport(
        subject=spec.name,
        numeric=numeric,
        listed=closed.distinct,
        divergent=divergent,
        note="multiplicities or values differ" if divergent else None,
    )


def run_closed_form(args) -> int:
    spec = closed_form_from_text(args.name)
    closed = closed_form_spectrum(spec)
    report = compare_closed_form(spec) if args.compare else None
    if args.format == "text":
        text = render_closed_form(closed)
        if report is not None:
            text += render_discrepancy(report)
    else:
        text = to_json(dict(closed_form=closed, comparison=report)) + "\n"
    emit(text, args.out)
    return EXIT_VIOLATION if report is not None and report.divergent else EXIT_OK


def run_alpha(args) -> int:
    g, source = load_graph(args)
    tol = args.tol if args.tol is not None else get_settings().conjecture_tol
    alpha_graph = algebraic_connectivity(g)
    direct, via_spectrum = complement_algebraic_connectivity(g)
    data = dict(graph=source, alpha=alpha_graph, complement_alpha=direct, complement_alpha_from_spectrum=via_spectrum)
    exit_code = EXIT_OK
    if args.k is not None:
        k = g.n // 2 if args.k == HALF else args.k
        alpha_token = algebraic_connectivity(token_graph(g, k).graph)
        difference = abs(alpha_token - alpha_graph)
        data.update(k=k, alpha_token=alpha_token, alpha_difference=difference)
        if difference > tol:
            exit_code = EXIT_VIOLATION
    if args.format == "text":
        emit(f"{to_json(data['alpha'])}\n", args.out)
    else:
        emit(to_json(data) + "\n", args.out)
    return exit_code


def run_scan(args) -> int:
    lines, corpus = load_corpus(args)
    report = scan(lines, "conjecture", args.k, tol=args.tol, jobs=args.jobs, progress=args.progress, corpus=corpus)
    emit(report_to_json_lines(report), args.out)
    return EXIT_VIOLATION if report.summary.violations else EXIT_OK


def run_atlas(args) -> int:
    lines = atlas_graph6(args.max_n, args.connected)
    emit("".join(line + "\n" for line in lines), args.out)
    return EXIT_OK


commands = {
    "build": run_build,
    "spectrum": run_spectrum,
    "verify": run_verify,
    "contain": run_contain,
    "pairing": run_pairing,
    "closed-form": run_closed_form,
    "alpha": run_alpha,
    "scan": run_scan,
    "atlas": run_atlas,
}


def dispatch(argv: Optional[List[str]] = None) -> int:
    tl = cli()
    try:
        args = tl.parse_args(argv)
    except SystemExit as error:
        return EXIT_OK if error.code == 0 else EXIT_USAGE

    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logger.setLevel(logging.DEBUG if args.v else logging.WARNING)
    try:
        return commands[args.command](args)
    except TokenLapError as error:
        sys.stderr.write(f"tokenlap: {error}\n")
        return EXIT_USAGE
    except OSError as error:
        sys.stderr.write(f"tokenlap: {error}\n")
        return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> int:
    return dispatch(argv)
