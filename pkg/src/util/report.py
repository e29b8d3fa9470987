# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Report documents: building, rendering and the comparable body."""

import json
import sys
from typing import Any, Dict, Iterable, Optional

from constants.defaults import SCHEMA_VERSION
from search import CheckReport, SearchStrategy

METADATA = "metadata"


def build_document(
    instance_id: str,
    strategy: SearchStrategy,
    reports: Iterable[CheckReport],
    runtime_ms: int,
    extra_metadata: Optional[Dict[str, Any]] = None,
) -> Dict[str, Any]:
    """Assemble the report document of one run.

    Args:
        instance_id: instance the claims were checked on.
        strategy: strategy of the run.
        reports: claim reports in canonical order.
        runtime_ms: wall time of the run, kept out of the comparable body.
        extra_metadata: further entries of the excluded metadata block.

    Returns:
        the report document.
    """
    metadata: Dict[str, Any] = {"runtime_ms": runtime_ms}
    metadata.update(extra_metadata or {})
    return {
        "schema_version": SCHEMA_VERSION,
        "instance_id": instance_id,
        "strategy": strategy.echo(),
        "results": [report.to_dict() for report in reports],
        METADATA: metadata,
    }


def render(document: Dict[str, Any]) -> str:
    """Sorted-key, two-space indented JSON with a trailing newline."""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def comparable_body(document: Dict[str, Any]) -> Dict[str, Any]:
    """The document without its metadata block."""
    return {key: value for key, value in document.items() if key != METADATA}


def write_report(text: str, path: Optional[str] = None) -> None:
    """Write a rendered report to a file, or to stdout when no path is given."""
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as report_file:
        report_file.write(text)


def read_report(path: str) -> Dict[str, Any]:
    """Load a report document."""
    with open(path, encoding="utf-8") as report_file:
        return json.load(report_file)
