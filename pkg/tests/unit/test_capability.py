# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Capability guard unit tests."""

from unittest import TestCase

from capability import requires_enumeration, requires_finite
from exceptions import CapabilityError


class TestCapability(TestCase):
    """Unit tests for the capability decorators.

    Attrs:
        maxDiff: Specifies max difference shown by failed tests.
    """

    maxDiff = None

    def test_requires_finite_decorator(self):
        """Test `requires_finite` decorator"""
        with self.subTest("finite"):
            guarded = Guarded(finite=True, exhaustive=True)

            self.assertTrue(guarded.method_with_requires_finite())

        with self.subTest("infinite"):
            guarded = Guarded(finite=False, exhaustive=False)

            with self.assertRaises(CapabilityError) as raised:
                guarded.method_with_requires_finite()

            self.assertIn("method_with_requires_finite needs a finite carrier", str(raised.exception))
            self.assertIn("i4", str(raised.exception))

    def test_requires_enumeration_decorator(self):
        """Test `requires_enumeration` decorator"""
        for finite, exhaustive, allowed in (
            (True, True, True),
            (True, False, True),
            (False, False, True),
            (False, True, False),
        ):
            with self.subTest(finite=finite, exhaustive=exhaustive):
                guarded = Guarded(finite=finite, exhaustive=exhaustive)
                if allowed:
                    self.assertTrue(guarded.method_with_requires_enumeration())
                    continue
                with self.assertRaises(CapabilityError):
                    guarded.method_with_requires_enumeration()

    def test_wrapped_name(self):
        """Decorated methods keep their name and docstring."""
        self.assertEqual(Guarded.method_with_requires_finite.__name__, "method_with_requires_finite")
        self.assertEqual(Guarded.method_with_requires_finite.__doc__, "Mock to test `requires_finite`")


class Guarded:
    """Test class with an instance and a strategy"""

    def __init__(self, finite: bool, exhaustive: bool) -> None:
        self.instance = MockInstance(finite)
        self.strategy = MockStrategy(exhaustive)

    @requires_finite
    def method_with_requires_finite(self):
        """Mock to test `requires_finite`"""
        return True

    @requires_enumeration
    def method_with_requires_enumeration(self):
        """Mock to test `requires_enumeration`"""
        return True


class MockInstance:
    """A mock instance"""

    instance_id = "i4"

    def __init__(self, finite: bool) -> None:
        self.finite = finite


class MockStrategy:
    """A mock strategy"""

    def __init__(self, exhaustive: bool) -> None:
        self.exhaustive = exhaustive
