"""Rendering of reports for the command line."""

import json
from functools import lru_cache

from jinja2 import Environment, PackageLoader
from pydantic import BaseModel

from .enums import OutputFormat
from .schema import CheckSummary, RunReport


@lru_cache()
def get_templates() -> Environment:
    """
    Get the Jinja2 templates.

    Returns:
        Environment: The Jinja2 environment over the package templates.
    """
    return Environment(
        loader=PackageLoader("milnor_hodge", "templates"),
        autoescape=False,
        keep_trailing_newline=True,
    )


def render_json(model: BaseModel) -> str:
    """Dump a report as indented JSON with aliased field names."""
    return model.model_dump_json(by_alias=True, indent=2) + "\n"


def render_report(report: RunReport, output: OutputFormat) -> str:
    """
    Render a run report.

    Args:
        report (RunReport): The report.
        output (OutputFormat): The output format.

    Returns:
        str: The rendered report.
    """
    if output == OutputFormat.JSON:
        return render_json(report)
    return get_templates().get_template("report.txt.j2").render(report=report)


def render_check_summary(summary: CheckSummary, output: OutputFormat) -> str:
    """
    Render the outcome of a corpus run.

    Args:
        summary (CheckSummary): The outcome.
        output (OutputFormat): The output format.

    Returns:
        str: The rendered outcome.
    """
    if output == OutputFormat.JSON:
        return render_json(summary)
    return get_templates().get_template("check.txt.j2").render(summary=summary)


def render_builtins(names: list[str], output: OutputFormat) -> str:
    """Render the names of the built-in arrangements."""
    if output == OutputFormat.JSON:
        return json.dumps(names, indent=2) + "\n"
    return "".join(f"{name}\n" for name in names)
