import pathlib
from typing import List

from jinja2 import Template

from tokenlap.combinatorics import labels_of
from tokenlap.errors import UnknownTemplateError
from tokenlap.graphs.core import MAX_BASE_ORDER
from tokenlap.graphs.graph6 import write_graph6
from tokenlap.helpers import format_float
from tokenlap.spectral.closed_forms import ClosedForm
from tokenlap.tokens import TokenGraph
from tokenlap.types import DiscrepancyReport, IdentityReport, Spectrum

templates_dir = pathlib.Path(__file__).parent / "templates"

supported_templates = sorted(path.stem for path in templates_dir.glob("*.jinja2"))


def render_jinja2_template(name: str, **params) -> str:
    template_file = templates_dir / f"{name}.jinja2"
    if not template_file.is_file():
        raise UnknownTemplateError(name, supported_templates)
    with open(template_file) as t:
        template = Template(t.read(), keep_trailing_newline=True)
        return template.render(**params)


def _groups(groups) -> List[tuple]:
    return [(format_float(value) if isinstance(value, float) else value, m) for value, m in groups]


def render_spectrum(spectrum: Spectrum, title: str) -> str:
    return render_jinja2_template(
        "spectrum", title=title, dimension=spectrum.dimension, groups=_groups(spectrum.groups)
    )


def render_closed_form(closed_form: ClosedForm) -> str:
    return render_jinja2_template(
        "closed_form",
        family=closed_form.family,
        groups=_groups(closed_form.groups) if closed_form.groups else None,
        values=closed_form.values or [],
    )


def render_token_graph(tg: TokenGraph, source: str) -> str:
    graph = tg.graph
    return render_jinja2_template(
        "build",
        k=tg.k,
        source=source,
        vertices=graph.n,
        edges=graph.edge_count,
        degree=graph.is_regular(),
        graph6=write_graph6(graph) if graph.n <= MAX_BASE_ORDER else None,
        edge_list=list(graph.edges()),
        legend=[(vertex, labels_of(mask)) for vertex, mask in enumerate(tg.index.masks)],
    )


def render_identities(reports: List[IdentityReport]) -> str:
    return render_jinja2_template("identities", reports=reports)


def render_discrepancy(report: DiscrepancyReport) -> str:
    return render_jinja2_template(
        "discrepancy",
        subject=report.subject,
        divergent=report.divergent,
        numeric=_groups(report.numeric.groups) if report.numeric else [],
        listed=[format_float(v) for v in report.listed],
        missing_from_list=[format_float(v) for v in report.missing_from_list],
        listed_but_absent=[format_float(v) for v in report.listed_but_absent],
        note=report.note,
    )
