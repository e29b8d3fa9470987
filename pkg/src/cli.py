#!/usr/bin/env python3
# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Command-line front end of the filtered valuation checker."""

import argparse
import logging
import sys
from pathlib import Path
from typing import IO, Any, Dict, List, Optional

import yaml

from config import RunConfig, load_config
from constants.defaults import EXIT_ERROR, EXIT_OK

logger = logging.getLogger(__name__)

ACTIONS_PATH = Path(__file__).resolve().parent.parent / "actions.yaml"

PARAM_TYPES = {"string": str, "integer": int}


class CommandEvent:
    """Parameters and outcome of one command.

    Attrs:
        name: command name.
        params: parsed parameters, keyed with underscores.
        results: values recorded with set_results.
        failure: message of the last fail call.
        exit_code: process exit code.
    """

    def __init__(self, name: str, params: Dict[str, Any]):
        """Construct.

        Args:
            name: command name.
            params: parsed parameters.
        """
        self.name = name
        self.params = params
        self.results: Dict[str, Any] = {}
        self.failure: Optional[str] = None
        self.exit_code = EXIT_OK

    def log(self, message: str) -> None:
        """Progress message."""
        logger.info(message)

    def fail(self, message: str, exit_code: int = EXIT_ERROR) -> None:
        """Mark the command failed."""
        self.failure = message
        self.exit_code = exit_code

    def set_results(self, results: Dict[str, Any]) -> None:
        """Record results of the command."""
        self.results.update(results)


class ValuationCli:
    """Dispatches commands to their handlers."""

    def __init__(self, stdout: Optional[IO[str]] = None):
        """Construct.

        Args:
            stdout: stream for printed output, sys.stdout by default.
        """
        self.stdout = stdout or sys.stdout

    def run_config(self, event: CommandEvent) -> RunConfig:
        """Run configuration from the config file and the command's flags.

        Raises:
            ConfigError: when the file or a field is invalid.
        """
        params = event.params
        checks = params.get("checks")
        overrides = {
            "instance": params.get("instance"),
            "checks": [c.strip() for c in checks.split(",") if c.strip()] if checks else None,
            "strategy": {
                "kind": params.get("strategy"),
                "seed": params.get("seed"),
                "samples": params.get("samples"),
                "level_bound": params.get("level_bound"),
            },
            "output": params.get("out"),
            "expect": params.get("expect"),
            "n_max": params.get("n_max"),
        }
        return load_config(params.get("config"), overrides)

    def dispatch(self, name: str, params: Dict[str, Any]) -> CommandEvent:
        """Run one command and return its event."""
        event = CommandEvent(name, params)
        handler = getattr(self, f"on_{name}_action")
        handler(event)
        if event.failure is not None:
            logger.error(event.failure)
        return event

    ###########
    # ACTIONS #
    ###########
    from actions.check import on_check_action
    from actions.skeleton import on_skeleton_action
    from actions.valuate import on_valuate_action


def load_actions(path: Path = ACTIONS_PATH) -> Dict[str, Any]:
    """Command declarations."""
    with open(path, encoding="utf-8") as actions_file:
        return yaml.safe_load(actions_file)


def build_parser(actions: Dict[str, Any]) -> argparse.ArgumentParser:
    """Argument parser with one subcommand per declared action."""
    parser = argparse.ArgumentParser(
        prog="filtered-valuations",
        description="Check the valuation axioms of filtered rings and modules.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, declaration in actions.items():
        description = declaration.get("description", "")
        sub = subparsers.add_parser(name, help=description.strip().splitlines()[0], description=description)
        required = set(declaration.get("required", ()))
        for param, details in declaration.get("params", {}).items():
            kwargs: Dict[str, Any] = {"help": details.get("description", "").strip()}
            if "enum" in details:
                kwargs["choices"] = details["enum"]
            if details["type"] == "array":
                kwargs["nargs"] = "+"
            else:
                kwargs["type"] = PARAM_TYPES[details["type"]]
            if param in required:
                sub.add_argument(param.replace("-", "_"), **kwargs)
            else:
                sub.add_argument(f"--{param}", **kwargs)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run the command and return its exit code."""
    logging.basicConfig(level=logging.INFO, format="[%(levelname)s] %(message)s", stream=sys.stderr)
    args = build_parser(load_actions()).parse_args(argv)
    params = {key: value for key, value in vars(args).items() if key != "command"}
    return ValuationCli().dispatch(args.command, params).exit_code


if __name__ == "__main__":  # pragma: nocover
    sys.exit(main())
