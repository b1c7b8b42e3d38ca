"""Corpus scanner over graph6 streams.

Every record is checked independently, so the work is spread over a process
pool; results come back through `imap`, which keeps input order whatever the
scheduling.
"""

import logging
import multiprocessing as mp
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Union

from tqdm import tqdm

from tokenlap.config import get_settings
from tokenlap.errors import PairingError, SubsetIndexError, TokenCapExceeded
from tokenlap.graphs.core import Graph
from tokenlap.graphs.graph6 import read_graph6_lines, write_graph6
from tokenlap.helpers import to_json, to_json_lines
from tokenlap.identities import run_identities
from tokenlap.spectral.core import algebraic_connectivity, spectrum_contains, spectrum_of
from tokenlap.spectral.pairing import pairing_decomposition
from tokenlap.tokens import check_token_parameters, token_graph
from tokenlap.types import ScanRecord, ScanReport, ScanSummary

logger = logging.getLogger(__name__)

HALF = "half"

TokenCount = Union[int, str]


@dataclass(frozen=True)
class ScanTask:
    line: int
    graph: Graph
    mode: str
    k: TokenCount
    h: Optional[int]


def resolve_k(k: TokenCount, n: int) -> int:
    return n // 2 if k == HALF else int(k)


def _skipped(task: ScanTask, code: str, reason: str, k: Optional[int] = None) -> ScanRecord:
    return ScanRecord(
        line=task.line, graph6=code, n=task.graph.n, k=k, h=task.h, status="skipped", reason=reason
    )


def _check_parameters(task: ScanTask, k: int) -> Optional[str]:
    settings = get_settings()
    try:
        check_token_parameters(task.graph, k, cap=min(settings.token_cap, settings.eig_cap))
        if task.h is not None:
            check_token_parameters(task.graph, task.h)
            if task.h > k:
                raise SubsetIndexError(f"Need h <= k, got h={task.h}, k={k}")
    except (SubsetIndexError, TokenCapExceeded) as error:
        return str(error)
    return None


def conjecture_record(task: ScanTask) -> ScanRecord:
    """α(F_k(G)) against α(G), with the containment and pairing checks on the same pair"""
    g = task.graph
    code = write_graph6(g)
    k = resolve_k(task.k, g.n)
    reason = _check_parameters(task, k)
    if reason is not None:
        return _skipped(task, code, reason, k)
    if not g.is_connected():
        return ScanRecord(
            line=task.line,
            graph6=code,
            n=g.n,
            k=k,
            status="trivial",
            alpha_graph=0.0,
            alpha_token=0.0,
            alpha_difference=0.0,
            reason="disconnected",
        )
    token = token_graph(g, k).graph
    alpha_graph = algebraic_connectivity(g)
    alpha_token = algebraic_connectivity(token)
    containment_ok = spectrum_contains(
        spectrum_of(g), spectrum_of(token), get_settings().containment_tol
    )
    try:
        pairing_ok = pairing_decomposition(g, k).sums_match_johnson
    except PairingError as error:
        logger.info("line %d: %s", task.line, error)
        pairing_ok = False
    return ScanRecord(
        line=task.line,
        graph6=code,
        n=g.n,
        k=k,
        alpha_graph=alpha_graph,
        alpha_token=alpha_token,
        alpha_difference=abs(alpha_token - alpha_graph),
        containment_ok=containment_ok,
        pairing_ok=pairing_ok,
    )


def identity_record(task: ScanTask) -> ScanRecord:
    g = task.graph
    code = write_graph6(g)
    k = resolve_k(task.k, g.n)
    reason = _check_parameters(task, k)
    if reason is not None:
        return _skipped(task, code, reason, k)
    reports = run_identities(g, task.h, k)
    return ScanRecord(
        line=task.line,
        graph6=code,
        n=g.n,
        k=k,
        h=task.h,
        identities={report.identity: report.holds for report in reports},
    )


scanners = {
    "conjecture": conjecture_record,
    "identities": identity_record,
}


def scan_record(task: ScanTask) -> ScanRecord:
    return scanners[task.mode](task)


def is_violation(record: ScanRecord, tol: float) -> bool:
    if record.alpha_difference is not None and record.alpha_difference > tol:
        return True
    return bool(record.failed_checks)


def _run(tasks: List[ScanTask], jobs: int, progress: bool) -> Iterator[ScanRecord]:
    bar = dict(total=len(tasks), disable=not progress, file=sys.stderr, unit="graph")
    if jobs <= 1 or len(tasks) <= 1:
        yield from tqdm(map(scan_record, tasks), **bar)
        return
    chunksize = max(1, len(tasks) // (jobs * 8))
    with mp.Pool(processes=jobs) as pool:
        yield from tqdm(pool.imap(scan_record, tasks, chunksize=chunksize), **bar)


def scan(
    lines: Iterable[str],
    mode: str,
    k: TokenCount,
    h: Optional[int] = None,
    tol: Optional[float] = None,
    jobs: Optional[int] = None,
    progress: bool = False,
    corpus: str = "stdin",
) -> ScanReport:
    settings = get_settings()
    tol = tol if tol is not None else settings.conjecture_tol
    jobs = jobs if jobs is not None else settings.jobs
    # parse everything first so a broken record aborts before any work starts
    tasks = [
        ScanTask(line=number, graph=graph, mode=mode, k=k, h=h)
        for number, graph in read_graph6_lines(lines)
    ]
    logger.debug("scanning %d graphs in %s mode with %d workers", len(tasks), mode, jobs)
    records = list(_run(tasks, jobs, progress))
    violations = [r.line for r in records if is_violation(r, tol)]
    differences = [r.alpha_difference for r in records if r.alpha_difference is not None]
    summary = ScanSummary(
        graphs_scanned=len(records),
        skipped=sum(1 for r in records if r.status == "skipped"),
        max_alpha_difference=max(differences, default=0.0),
        violations=violations,
    )
    return ScanReport(
        corpus=corpus, mode=mode, tolerance=tol, k=k, h=h, records=records, summary=summary
    )


def scan_conjecture(
    lines: Iterable[str],
    k: TokenCount = 2,
    tol: Optional[float] = None,
    jobs: Optional[int] = None,
    progress: bool = False,
    corpus: str = "stdin",
) -> ScanReport:
    return scan(lines, "conjecture", k, tol=tol, jobs=jobs, progress=progress, corpus=corpus)


def run_identity_suite(
    lines: Iterable[str],
    h: int,
    k: TokenCount,
    jobs: Optional[int] = None,
    progress: bool = False,
    corpus: str = "stdin",
) -> ScanReport:
    return scan(lines, "identities", k, h=h, jobs=jobs, progress=progress, corpus=corpus)


def report_to_json_lines(report: ScanReport) -> str:
    """header, one line per record, then the summary"""
    header = {
        "corpus": report.corpus,
        "mode": report.mode,
        "tolerance": report.tolerance,
        "k": report.k,
        "h": report.h,
    }
    return to_json(header) + "\n" + to_json_lines(report.records) + to_json(report.summary) + "\n"
