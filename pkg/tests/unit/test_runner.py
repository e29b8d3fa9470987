# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Claim runner unit tests."""

from unittest import TestCase
from unittest.mock import patch

import runner as runner_module
from constants.claims import CLAIMS
from exceptions import CapabilityError, ConfigError
from instances import get_instance
from runner import ClaimRunner
from search import EXHAUSTIVE, SearchStrategy, StrategyKind, Verdict
from valuation import valuation_suite

SAMPLED = SearchStrategy(StrategyKind.BOUNDED_RANDOM, seed=0, samples=100, level_bound=8)


class TestClaimRunner(TestCase):
    """Dispatch, ordering and memoisation."""

    maxDiff = None

    def test_canonical_order(self):
        """Reports come back in vocabulary order whatever the request order."""
        runner = ClaimRunner(get_instance("i5"))
        reports = runner.run_all(["prop3.4", "structure", "def2.5.i"])
        self.assertEqual([r.claim_id for r in reports], ["structure", "def2.5.i", "prop3.4"])

    def test_every_claim_on_field(self):
        """Every claim has a handler; on F_7 only the triviality claim fails."""
        reports = ClaimRunner(get_instance("i5")).run_all()
        self.assertEqual([r.claim_id for r in reports], list(CLAIMS))
        failed = [(r.claim_id, r.witness) for r in reports if r.verdict == Verdict.FAIL]
        self.assertEqual(failed, [("prop3.1", {"level": 1, "r": "1"})])

    def test_vacuous_implications(self):
        """A refuted hypothesis makes the implications vacuously true."""
        runner = ClaimRunner(get_instance("i1"))
        for claim in ("cor3.1", "prop3.1"):
            with self.subTest(claim=claim):
                report = runner.run(claim)
                self.assertEqual(report.verdict, Verdict.PASS)
                self.assertEqual(report.note, "vacuous: hypothesis def2.5.iii is FAIL")

    def test_memoised(self):
        """Each claim is computed once per runner."""
        runner = ClaimRunner(get_instance("i1"))
        with patch.object(runner_module, "check_strong", wraps=runner_module.check_strong) as strong:
            runner.run("def2.2")
            runner.run("prop3.1")
            runner.run("def2.2")
        self.assertEqual(strong.call_count, 2)
        self.assertIs(runner.run("def2.2"), runner.run("def2.2"))

    def test_unknown_claim(self):
        """Claim ids outside the vocabulary are config errors."""
        runner = ClaimRunner(get_instance("i1"))
        with self.assertRaises(ConfigError):
            runner.run("def9.9")
        with self.assertRaises(ConfigError):
            runner.run_all(["def2.5.i", "def9.9"])

    def test_exhaustive_on_infinite(self):
        """Exhaustive runs on Z are refused outright."""
        with self.assertRaises(CapabilityError):
            ClaimRunner(get_instance("i4"), EXHAUSTIVE).run_all()

    def test_integers_sampled(self):
        """On Z, claims needing enumeration come back INCONCLUSIVE with the reason."""
        runner = ClaimRunner(get_instance("i4"), SAMPLED)
        report = runner.run("prop3.4")
        self.assertEqual(report.verdict, Verdict.INCONCLUSIVE)
        self.assertIn("needs a finite carrier", report.note)
        self.assertEqual(runner.run("def2.5.i").verdict, Verdict.PASS)
        self.assertEqual(runner.run("def2.2").note, "levels checked up to 8")

    def test_sampled_runs_replay(self):
        """Equal seeds give equal reports, with nothing carried over between runs."""
        first = ClaimRunner(get_instance("i4"), SAMPLED).run_all(["def2.5.iii", "prop2.1.v", "prop2.1.vii"])
        valuation_suite.cache_clear()
        get_instance.cache_clear()
        second = ClaimRunner(get_instance("i4"), SAMPLED).run_all(["def2.5.iii", "prop2.1.v", "prop2.1.vii"])
        self.assertEqual([r.to_dict() for r in first], [r.to_dict() for r in second])
