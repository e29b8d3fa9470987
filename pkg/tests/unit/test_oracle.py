# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Brute-force oracle unit tests."""

from unittest import TestCase

from algebra import INFINITY, finite
from exceptions import CapabilityError, ConfigError
from instances import get_instance
from runner import ClaimRunner
from util.oracle import ORACLE_CLAIMS, Oracle


class TestOracle(TestCase):
    """Direct evaluation from the definitions."""

    maxDiff = None

    def test_agrees_with_checkers(self):
        """Verdicts and witnesses of the checkers match the oracle claim by claim."""
        for instance_id in ("i1", "i2", "i5", "i6"):
            instance = get_instance(instance_id)
            runner = ClaimRunner(instance)
            oracle = Oracle(instance)
            for claim in ORACLE_CLAIMS:
                with self.subTest(instance=instance_id, claim=claim):
                    report = runner.run(claim)
                    expected = oracle.evaluate(claim)
                    self.assertEqual(report.verdict.value, expected.verdict)
                    self.assertEqual(report.witness, expected.witness)

    def test_agrees_on_larger_carriers(self):
        """F_5[x]/(x^4) and (Z/9)^2 agree with the oracle on the claims that finish quickly there."""
        # Triple quantifiers over 625 or 81 elements are left to the golden runs.
        slow = ("def2.5.iii", "prop2.1.iv", "prop2.1.v", "def2.6", "cor3.1", "prop3.1")
        cases = {
            "i3": ("def2.1.i", "def2.3.i", "def2.5.i", "def2.5.onto", "prop2.1.ii", "prop2.1.iii"),
            "i7": tuple(claim for claim in ORACLE_CLAIMS if claim not in slow),
        }
        for instance_id, claims in cases.items():
            instance = get_instance(instance_id)
            runner = ClaimRunner(instance)
            oracle = Oracle(instance)
            for claim in claims:
                with self.subTest(instance=instance_id, claim=claim):
                    report = runner.run(claim)
                    expected = oracle.evaluate(claim)
                    self.assertEqual(report.verdict.value, expected.verdict)
                    self.assertEqual(report.witness, expected.witness)

    def test_values(self):
        """The oracle's nu is a plain level scan."""
        oracle = Oracle(get_instance("i2"))
        self.assertEqual(oracle.nu(4), finite(2))
        self.assertEqual(oracle.nu(0), INFINITY)
        self.assertEqual(oracle.core(), [0])

    def test_pair(self):
        """A and P of Z/8 are the ring and the even residues."""
        a_members, p_members = Oracle(get_instance("i2")).pair()
        self.assertEqual(a_members, list(range(8)))
        self.assertEqual(p_members, [0, 2, 4, 6])

    def test_skeleton(self):
        """Representatives are the least elements of each class."""
        self.assertEqual(Oracle(get_instance("i1")).skeleton(), (1, 3))
        self.assertEqual(Oracle(get_instance("i6")).skeleton(), ())

    def test_unknown_claim(self):
        """Only claims with a definition to evaluate are known."""
        with self.assertRaises(ConfigError):
            Oracle(get_instance("i1")).evaluate("structure")

    def test_infinite(self):
        """Z cannot be enumerated."""
        with self.assertRaises(CapabilityError):
            Oracle(get_instance("i4")).evaluate("def2.5.i")
