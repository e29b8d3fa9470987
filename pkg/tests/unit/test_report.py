# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Report document and golden comparison unit tests."""

import io
import os
import tempfile
from unittest import TestCase
from unittest.mock import patch

from search import EXHAUSTIVE, CheckReport, Verdict
from util.golden import compare
from util.report import build_document, comparable_body, read_report, render, write_report

REPORTS = [
    CheckReport("def2.5.i", Verdict.PASS, EXHAUSTIVE),
    CheckReport("def2.5.iv", Verdict.FAIL, EXHAUSTIVE, {"a": "3"}),
]


class TestReport(TestCase):
    """Building and rendering."""

    maxDiff = None

    def test_document(self):
        """Runtime and extra metadata live outside the comparable body."""
        document = build_document("i1", EXHAUSTIVE, REPORTS, 12, {"provenance": "hand"})
        self.assertEqual(document["metadata"], {"runtime_ms": 12, "provenance": "hand"})
        self.assertEqual(
            comparable_body(document),
            {
                "schema_version": 1,
                "instance_id": "i1",
                "strategy": {"kind": "exhaustive"},
                "results": [
                    {"claim_id": "def2.5.i", "verdict": "PASS", "tainted": False},
                    {"claim_id": "def2.5.iv", "verdict": "FAIL", "tainted": False, "witness": {"a": "3"}},
                ],
            },
        )

    def test_render(self):
        """Keys are sorted, indentation is two spaces and the text ends in a newline."""
        text = render({"b": 1, "a": {"d": "∞", "c": 2}})
        self.assertEqual(text, '{\n  "a": {\n    "c": 2,\n    "d": "∞"\n  },\n  "b": 1\n}\n')

    def test_write_and_read(self):
        """Reports round trip through files; without a path they go to stdout."""
        handle, path = tempfile.mkstemp(suffix=".json")
        os.close(handle)
        self.addCleanup(os.remove, path)
        document = build_document("i1", EXHAUSTIVE, REPORTS, 0)
        write_report(render(document), path)
        self.assertEqual(read_report(path), document)
        with patch("sys.stdout", new_callable=io.StringIO) as stdout:
            write_report("{}\n")
        self.assertEqual(stdout.getvalue(), "{}\n")


class TestGolden(TestCase):
    """Comparable bodies against golden files."""

    def setUp(self):
        handle, self.path = tempfile.mkstemp(suffix=".json")
        os.close(handle)
        self.addCleanup(os.remove, self.path)

    def test_metadata_ignored(self):
        """Runtime and provenance never cause a mismatch."""
        write_report(render(build_document("i1", EXHAUSTIVE, REPORTS, 999, {"provenance": "x"})), self.path)
        self.assertEqual(compare(build_document("i1", EXHAUSTIVE, REPORTS, 1), self.path), [])

    def test_formatting_ignored(self):
        """Golden files are compared after re-rendering."""
        with open(self.path, "w", encoding="utf-8") as golden:
            golden.write(render(build_document("i1", EXHAUSTIVE, REPORTS, 0)).replace("\n", " "))
        self.assertEqual(compare(build_document("i1", EXHAUSTIVE, REPORTS, 0), self.path), [])

    def test_mismatch(self):
        """A changed verdict shows up in a unified diff."""
        write_report(render(build_document("i1", EXHAUSTIVE, REPORTS, 0)), self.path)
        changed = build_document("i1", EXHAUSTIVE, REPORTS[:1], 0)
        diff = compare(changed, self.path)
        self.assertTrue(diff[0].startswith("---"))
        self.assertIn('-      "claim_id": "def2.5.iv",\n', diff)

    def test_unreadable(self):
        """A golden that is not JSON raises ValueError."""
        with open(self.path, "w", encoding="utf-8") as golden:
            golden.write("not json")
        with self.assertRaises(ValueError):
            compare(build_document("i1", EXHAUSTIVE, REPORTS, 0), self.path)
