# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Search strategy, report and search space unit tests."""

from unittest import TestCase
from unittest.mock import Mock

from hypothesis import given, settings
from hypothesis import strategies as st

from algebra import finite, infinite
from constants.statuses import TAINTED
from exceptions import CapabilityError
from instances import get_instance
from search import EXHAUSTIVE, CheckReport, Judgement, SearchSpace, SearchStrategy, StrategyKind, Verdict


def random_strategy(seed=1, samples=100, level_bound=8):
    return SearchStrategy(StrategyKind.BOUNDED_RANDOM, seed, samples, level_bound)


class TestSearchStrategy(TestCase):
    """Strategy echo and seeding."""

    def test_echo(self):
        """Exhaustive echoes its kind only; bounded random echoes every knob."""
        self.assertEqual(EXHAUSTIVE.echo(), {"kind": "exhaustive"})
        self.assertEqual(
            random_strategy().echo(), {"kind": "bounded_random", "level_bound": 8, "samples": 100, "seed": 1}
        )

    def test_rng_replays(self):
        """Equal seed and salt give the same stream, another salt another one."""
        strategy = random_strategy()
        self.assertEqual(strategy.rng("a").random(), strategy.rng("a").random())
        self.assertNotEqual(strategy.rng("a").random(), strategy.rng("b").random())


class TestCheckReport(TestCase):
    """Report entries."""

    def test_to_dict_omits_empty_fields(self):
        """Witness and note only appear when set."""
        report = CheckReport("def2.5.i", Verdict.PASS, EXHAUSTIVE)
        self.assertEqual(report.to_dict(), {"claim_id": "def2.5.i", "verdict": "PASS", "tainted": False})

    def test_to_dict_full(self):
        """A FAIL entry carries its witness and note."""
        report = CheckReport("def2.5.iv", Verdict.FAIL, EXHAUSTIVE, {"a": "3"}, False, "n")
        self.assertEqual(
            report.to_dict(),
            {"claim_id": "def2.5.iv", "verdict": "FAIL", "tainted": False, "witness": {"a": "3"}, "note": "n"},
        )


class TestJudgement(TestCase):
    """Capped infinities keep verdicts out of PASS and FAIL."""

    def test_untainted(self):
        """Without capped values a judgement reports what it is told."""
        valuation = Mock(taint_hits=0)
        judgement = Judgement("def2.5.i", EXHAUSTIVE, valuation)
        self.assertEqual(judgement.fail(x="1").verdict, Verdict.FAIL)
        self.assertEqual(judgement.passed("ok").note, "ok")

    def test_tainted(self):
        """A capped value handed out during the check turns PASS and FAIL into INCONCLUSIVE."""
        valuation = Mock(taint_hits=2)
        judgement = Judgement("def2.5.i", EXHAUSTIVE, valuation)
        valuation.taint_hits = 3
        for report in (judgement.fail(x="1"), judgement.passed()):
            with self.subTest(report=report):
                self.assertEqual(report.verdict, Verdict.INCONCLUSIVE)
                self.assertTrue(report.tainted)
                self.assertEqual(report.note, TAINTED)

    def test_without_valuation(self):
        """Judgements of claims that never evaluate nu are never tainted."""
        judgement = Judgement("def2.1.i", EXHAUSTIVE)
        self.assertFalse(judgement.tainted)
        self.assertEqual(judgement.inconclusive("why").note, "why")


class TestSearchSpace(TestCase):
    """Element pools and levels."""

    def test_exhaustive_on_infinite(self):
        """Exhaustive search on Z is refused."""
        with self.assertRaises(CapabilityError):
            SearchSpace(get_instance("i4"), EXHAUSTIVE, "x")

    def test_exhaustive_pools(self):
        """Exhaustive pools are whole carriers; levels reach two past the stabilization depth."""
        space = SearchSpace(get_instance("i1"), EXHAUSTIVE, "x")
        self.assertEqual(space.ring_elements(), tuple(range(9)))
        self.assertEqual(space.module_elements(2), tuple(range(9)))
        self.assertEqual(space.levels(), range(5))

    def test_random_pools_sorted_with_probes(self):
        """Random pools start with the probes and are in element order."""
        instance = get_instance("i4")
        space = SearchSpace(instance, random_strategy(samples=100), "x")
        pool = space.module_elements(2)
        self.assertEqual(pool[:3], (0, 1, -1))
        self.assertEqual(list(pool), sorted(pool, key=instance.module.order_key))
        self.assertGreaterEqual(len(pool), 10)
        self.assertEqual(space.levels(), range(9))

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 10**6))
    def test_random_pools_replay(self, seed):
        """Equal seeds draw equal pools."""
        instance = get_instance("i4")
        first = SearchSpace(instance, random_strategy(seed=seed), "x").ring_elements(1)
        second = SearchSpace(instance, random_strategy(seed=seed), "x").ring_elements(1)
        self.assertEqual(first, second)

    def test_values_order_under_sorting(self):
        """Pools of values sort with infinity last."""
        self.assertEqual(sorted([infinite(), finite(3), finite(0)]), [finite(0), finite(3), infinite()])
