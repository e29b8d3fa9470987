# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Valuate action."""

from __future__ import annotations

from typing import TYPE_CHECKING

from exceptions import ValuationError
from valuation import nu

if TYPE_CHECKING:
    from cli import CommandEvent, ValuationCli


def on_valuate_action(self: ValuationCli, event: CommandEvent) -> None:
    """Print nu of each element, with inf marked exact or capped."""

    def fail_action(msg):
        event.log(msg)
        event.fail(msg)

    try:
        config = self.run_config(event)
        instance = config.build_instance()
        elements = [instance.element(text) for text in event.params["elements"]]
    except ValuationError as exc:
        fail_action(str(exc))
        return

    values = {}
    for x in elements:
        text = instance.format(x.encoding)
        values[text] = str(nu(instance, x, config.strategy.level_bound))
        self.stdout.write(f"{text} {values[text]}\n")
    event.set_results({"instance": instance.instance_id, "values": values})
