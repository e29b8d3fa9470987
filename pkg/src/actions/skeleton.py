# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Skeleton action."""

from __future__ import annotations

import time
from typing import TYPE_CHECKING

from constants.errors import OUTPUT_FILE
from constants.statuses import EMPTY_SKELETON, PARTITION_BY_COMPONENTS
from exceptions import ValuationError
from runner import ClaimRunner
from util.report import build_document, render, write_report

if TYPE_CHECKING:
    from cli import CommandEvent, ValuationCli

SKELETON_CLAIMS = ("def2.6", "def2.7", "prop3.3.i", "prop3.3.ii", "prop3.4")


def on_skeleton_action(self: ValuationCli, event: CommandEvent) -> None:
    """Compute representatives and classes off the core, with the skeleton claims."""
    event.log("Computing skeleton...")

    def fail_action(msg):
        event.log(msg)
        event.fail(msg)

    try:
        config = self.run_config(event)
        instance = config.build_instance()
        strategy = config.strategy.to_strategy()
        start = time.monotonic()
        runner = ClaimRunner(instance, strategy, config.n_max)
        reports = runner.run_all(SKELETON_CLAIMS)
        skeleton = runner.skeleton
    except ValuationError as exc:
        fail_action(str(exc))
        return
    runtime_ms = round((time.monotonic() - start) * 1000)

    representatives = [instance.format(r) for r in skeleton.representatives]
    document = build_document(instance.instance_id, strategy, reports, runtime_ms)
    document["representatives"] = representatives
    document["classes"] = {instance.format(x): representatives[i] for x, i in skeleton.class_of.items()}
    document["exact_partition"] = skeleton.exact_partition
    if not representatives:
        document["note"] = EMPTY_SKELETON
    elif not skeleton.exact_partition:
        document["note"] = PARTITION_BY_COMPONENTS

    try:
        write_report(render(document), config.output)
    except OSError as exc:
        fail_action(OUTPUT_FILE.format(path=config.output, message=exc))
        return
    event.log(f"Skeleton of {instance.instance_id}: [{', '.join(representatives)}]")
    event.set_results({"instance": instance.instance_id, "representatives": representatives})
