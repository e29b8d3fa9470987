# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Check action."""

from __future__ import annotations

import collections
import time
from typing import TYPE_CHECKING

from constants.defaults import EXIT_ERROR, EXIT_MISMATCH
from constants.errors import GOLDEN_FILE, GOLDEN_MISMATCH, OUTPUT_FILE
from exceptions import ValuationError
from runner import ClaimRunner
from util.golden import compare
from util.report import build_document, render, write_report

if TYPE_CHECKING:
    from cli import CommandEvent, ValuationCli


def on_check_action(self: ValuationCli, event: CommandEvent) -> None:
    """Run the configured claims and write the report, comparing it with a golden file if asked."""
    event.log("Running checks...")

    def fail_action(msg, exit_code=EXIT_ERROR):
        event.log(msg)
        event.fail(msg, exit_code)

    try:
        config = self.run_config(event)
        instance = config.build_instance()
        strategy = config.strategy.to_strategy()
        start = time.monotonic()
        reports = ClaimRunner(instance, strategy, config.n_max).run_all(config.claims())
    except ValuationError as exc:
        fail_action(str(exc))
        return
    runtime_ms = round((time.monotonic() - start) * 1000)

    document = build_document(instance.instance_id, strategy, reports, runtime_ms)
    try:
        write_report(render(document), config.output)
    except OSError as exc:
        fail_action(OUTPUT_FILE.format(path=config.output, message=exc))
        return

    verdicts = collections.Counter(report.verdict.value for report in reports)
    event.set_results({"instance": instance.instance_id, "report": config.output or "-", **verdicts})
    event.log(f"Checked {len(reports)} claims on {instance.instance_id}: {dict(sorted(verdicts.items()))}")

    if config.expect is None:
        return
    try:
        diff = compare(document, config.expect)
    except (OSError, ValueError) as exc:
        fail_action(GOLDEN_FILE.format(path=config.expect, message=exc))
        return
    if diff:
        event.log("".join(diff))
        fail_action(GOLDEN_MISMATCH.format(path=config.expect), EXIT_MISMATCH)
        return
    event.log(f"Report matches {config.expect}.")
    event.set_results({"golden": "match"})
