# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Carrier law self-test unit tests."""

from unittest import TestCase

from algebra import RegularModule, ResidueRing
from filtration import Filtration
from instances import FilteredInstance, get_instance
from search import EXHAUSTIVE, Verdict
from structure import ring_laws, self_test_structure
from util.replay import WitnessReplay


class BrokenResidueRing(ResidueRing):
    """Z/5 with 1 + 1 = 3."""

    def add(self, a, b):
        if (a, b) == (1, 1):
            return 3
        return super().add(a, b)


def broken_instance():
    ring = BrokenResidueRing(5)
    filtration = Filtration(lambda x, n: n == 0 or x == 0, 1, True)
    return FilteredInstance("broken", ring, RegularModule(ring), filtration, filtration, stabilization_depth=1)


class TestStructure(TestCase):
    """Ring, module and action laws."""

    def test_catalog_passes(self):
        """Small catalog carriers satisfy every law exhaustively."""
        for instance_id in ("i1", "i2", "i5", "i6"):
            with self.subTest(instance=instance_id):
                report = self_test_structure(get_instance(instance_id), EXHAUSTIVE)
                self.assertEqual(report.verdict, Verdict.PASS)
                self.assertIsNone(report.note)

    def test_large_group_sampled(self):
        """Module triples of (Z/9)^2 exceed the budget and are sampled, which the note records."""
        report = self_test_structure(get_instance("i7"), EXHAUSTIVE)
        self.assertEqual(report.verdict, Verdict.PASS)
        self.assertEqual(report.note, "sampled 200000 of 531441 triples")

    def test_broken_addition(self):
        """The first triple breaking a law is reported, and replays on raw arithmetic."""
        instance = broken_instance()
        report = self_test_structure(instance, EXHAUSTIVE)
        self.assertEqual(report.verdict, Verdict.FAIL)
        self.assertEqual(report.witness, {"law": "additive associativity", "a": "1", "b": "1", "c": "2"})
        replay = WitnessReplay(instance)
        self.assertTrue(replay.confirms("structure", report.witness))
        self.assertFalse(replay.confirms("structure", {"law": "additive associativity", "a": "0", "b": "1", "c": "2"}))
        self.assertFalse(replay.confirms("structure", {"law": "no such law", "a": "1", "b": "1", "c": "2"}))

    def test_law_names(self):
        """Ring laws are named as they appear in witnesses."""
        self.assertIn("left distributivity", ring_laws(ResidueRing(2)))
        self.assertEqual(len(ring_laws(ResidueRing(2))), 9)
