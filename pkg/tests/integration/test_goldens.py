#!/usr/bin/env python3
# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""End-to-end runs of the command line against the golden reports."""

import json
import logging

import pytest
from integration.conftest import GOLDEN_DIR, clear_caches, golden_manifest

from cli import main
from constants.defaults import EXIT_ERROR, EXIT_MISMATCH, EXIT_OK
from util.report import comparable_body

logger = logging.getLogger(__name__)

GOLDENS = golden_manifest()


def check_args(entry, out, *extra):
    """Arguments of the check command pinned by a manifest entry."""
    return ["check", "--instance", entry["instance"], "--checks", ",".join(entry["checks"]), "--out", str(out), *extra]


class TestGoldens:
    """Golden reports reproduce through the command line."""

    @pytest.mark.parametrize("name", sorted(GOLDENS))
    def test_matches_golden(self, name, report_path):
        """Each pinned run matches its golden report and exits 0."""
        golden = GOLDEN_DIR / name
        logger.info("Checking %s", golden)
        assert main(check_args(GOLDENS[name], report_path, "--expect", str(golden))) == EXIT_OK

    def test_deterministic(self, tmp_path):
        """Two runs from cold caches with equal configuration give byte-identical comparable bodies."""
        bodies = []
        for run in ("first", "second"):
            clear_caches()
            out = tmp_path / f"{run}.json"
            args = ["check", "--instance", "i7", "--checks", "def2.5.iv,def2.7,prop3.4"]
            assert main([*args, "--out", str(out)]) == EXIT_OK
            bodies.append(json.dumps(comparable_body(json.loads(out.read_text(encoding="utf-8"))), sort_keys=True))
        assert bodies[0] == bodies[1]

    def test_sampled_deterministic(self, tmp_path):
        """Bounded random runs on Z replay for an equal seed and differ only in metadata."""
        bodies = []
        for run in ("first", "second"):
            clear_caches()
            out = tmp_path / f"{run}.json"
            args = ["check", "--instance", "i4", "--strategy", "bounded_random", "--seed", "11", "--samples", "64"]
            assert main([*args, "--level-bound", "6", "--out", str(out)]) == EXIT_OK
            document = json.loads(out.read_text(encoding="utf-8"))
            assert document["strategy"] == {"kind": "bounded_random", "level_bound": 6, "samples": 64, "seed": 11}
            bodies.append(comparable_body(document))
        assert bodies[0] == bodies[1]

    def test_mismatch(self, report_path):
        """A report compared with another instance's golden exits 1."""
        golden = GOLDEN_DIR / "i5-all.json"
        assert main(check_args(GOLDENS["i6-all.json"], report_path, "--expect", str(golden))) == EXIT_MISMATCH

    def test_exhaustive_on_infinite(self, report_path):
        """Exhaustive runs on Z exit 2 without writing a report."""
        assert main(["check", "--instance", "i4", "--out", str(report_path)]) == EXIT_ERROR
        assert not report_path.exists()
