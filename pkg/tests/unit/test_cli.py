# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Command-line front end unit tests."""

import io
import json
import os
import shutil
import tempfile
from pathlib import Path
from unittest import TestCase

from cli import CommandEvent, ValuationCli, build_parser, load_actions, main
from constants.defaults import EXIT_ERROR, EXIT_MISMATCH, EXIT_OK

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "data" / "golden"


class TestCommandEvent(TestCase):
    """Command outcome bookkeeping."""

    def test_fail(self):
        """Failing records the message and the exit code."""
        event = CommandEvent("check", {})
        self.assertEqual(event.exit_code, EXIT_OK)
        event.fail("Error: nope")
        self.assertEqual((event.failure, event.exit_code), ("Error: nope", EXIT_ERROR))
        event.fail("Error: differs", EXIT_MISMATCH)
        self.assertEqual(event.exit_code, EXIT_MISMATCH)

    def test_set_results(self):
        """Results accumulate."""
        event = CommandEvent("check", {})
        event.set_results({"a": 1})
        event.set_results({"b": 2})
        self.assertEqual(event.results, {"a": 1, "b": 2})


class TestParser(TestCase):
    """Parser generated from the command declarations."""

    def setUp(self):
        self.parser = build_parser(load_actions())

    def test_commands(self):
        """Every declared command is a subcommand."""
        self.assertEqual(set(load_actions()), {"check", "valuate", "skeleton"})

    def test_check_flags(self):
        """Dashed flags land on underscored keys with their declared types."""
        args = self.parser.parse_args(
            ["check", "--instance", "i4", "--strategy", "bounded_random", "--seed", "3", "--level-bound", "5"]
        )
        self.assertEqual(args.command, "check")
        self.assertEqual((args.instance, args.strategy, args.seed, args.level_bound), ("i4", "bounded_random", 3, 5))
        self.assertIsNone(args.n_max)

    def test_valuate_positional(self):
        """Required array params are positional, negative integers included."""
        args = self.parser.parse_args(["valuate", "18", "-7", "--instance", "i4"])
        self.assertEqual(args.elements, ["18", "-7"])

    def test_bad_choice(self):
        """Unknown strategy kinds are usage errors."""
        with self.assertRaises(SystemExit) as raised:
            self.parser.parse_args(["check", "--strategy", "clever"])
        self.assertEqual(raised.exception.code, 2)


class TestValuationCli(TestCase):
    """Commands dispatched to their handlers."""

    maxDiff = None

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, self.tmp)
        self.stdout = io.StringIO()
        self.cli = ValuationCli(stdout=self.stdout)

    def params(self, **params):
        return {"config": None, **params}

    def test_check_writes_report(self):
        """A completed run exits 0 even with FAIL verdicts, and counts them."""
        out = os.path.join(self.tmp, "report.json")
        event = self.cli.dispatch("check", self.params(instance="i1", checks="def2.5.i,def2.5.iv", out=out))
        self.assertEqual(event.exit_code, EXIT_OK)
        self.assertEqual(event.results, {"instance": "i1", "report": out, "PASS": 1, "FAIL": 1})
        with open(out, encoding="utf-8") as report:
            document = json.load(report)
        self.assertEqual([r["claim_id"] for r in document["results"]], ["def2.5.i", "def2.5.iv"])

    def test_check_golden(self):
        """A matching golden exits 0, a differing one exits 1."""
        out = os.path.join(self.tmp, "report.json")
        golden = str(GOLDEN_DIR / "i1-def2.5.iv.json")
        event = self.cli.dispatch("check", self.params(instance="i1", checks="def2.5.iv", out=out, expect=golden))
        self.assertEqual(event.exit_code, EXIT_OK)
        self.assertEqual(event.results["golden"], "match")

        event = self.cli.dispatch("check", self.params(instance="i1", checks="def2.5.iii", out=out, expect=golden))
        self.assertEqual(event.exit_code, EXIT_MISMATCH)
        self.assertIn("differs from golden", event.failure)

    def test_check_errors(self):
        """Config and capability errors exit 2."""
        out = os.path.join(self.tmp, "report.json")
        cases = (
            self.params(instance="i4", out=out),
            self.params(instance="i1", checks="def9.9", out=out),
            self.params(instance="i9", out=out),
            self.params(instance="i1", out=out, expect=os.path.join(self.tmp, "missing.json")),
            self.params(instance="i1", checks="def2.5.i", out=os.path.join(self.tmp, "no", "such", "dir.json")),
        )
        for params in cases:
            with self.subTest(params=params):
                event = self.cli.dispatch("check", params)
                self.assertEqual(event.exit_code, EXIT_ERROR)
                self.assertTrue(event.failure.startswith("Error: "))

    def test_check_config_file(self):
        """Flags override the config file."""
        config = os.path.join(self.tmp, "run.yaml")
        out = os.path.join(self.tmp, "report.json")
        with open(config, "w", encoding="utf-8") as config_file:
            config_file.write("instance: i6\nchecks: [def2.5.onto]\n")
        event = self.cli.dispatch("check", {"config": config, "instance": "i5", "out": out})
        self.assertEqual(event.results["instance"], "i5")
        self.assertEqual(event.results["PASS"], 1)

    def test_valuate(self):
        """One line per element, infinity marked exact."""
        event = self.cli.dispatch("valuate", self.params(instance="i4", elements=["18", "0", "-7"]))
        self.assertEqual(event.exit_code, EXIT_OK)
        self.assertEqual(self.stdout.getvalue(), "18 2\n0 inf(exact)\n-7 0\n")
        self.assertEqual(event.results["values"], {"18": "2", "0": "inf(exact)", "-7": "0"})

    def test_valuate_canonical(self):
        """Elements are echoed in canonical form."""
        self.cli.dispatch("valuate", self.params(instance="i1", elements=["12"]))
        self.assertEqual(self.stdout.getvalue(), "3 1\n")

    def test_valuate_bad_element(self):
        """Unparsable elements exit 2."""
        event = self.cli.dispatch("valuate", self.params(instance="i1", elements=["x"]))
        self.assertEqual(event.exit_code, EXIT_ERROR)
        self.assertEqual(self.stdout.getvalue(), "")

    def test_skeleton(self):
        """Representatives, classes and the skeleton claims go into the report."""
        out = os.path.join(self.tmp, "skeleton.json")
        event = self.cli.dispatch("skeleton", self.params(instance="i1", out=out))
        self.assertEqual(event.exit_code, EXIT_OK)
        self.assertEqual(event.results["representatives"], ["1", "3"])
        with open(out, encoding="utf-8") as report:
            document = json.load(report)
        self.assertEqual(document["classes"]["6"], "3")
        self.assertEqual(document["classes"]["8"], "1")
        self.assertTrue(document["exact_partition"])
        self.assertNotIn("note", document)
        self.assertEqual(
            [r["claim_id"] for r in document["results"]], ["def2.6", "def2.7", "prop3.3.i", "prop3.3.ii", "prop3.4"]
        )

    def test_skeleton_empty(self):
        """The all-infinite instance has an empty skeleton and says why."""
        out = os.path.join(self.tmp, "skeleton.json")
        self.cli.dispatch("skeleton", self.params(instance="i6", out=out))
        with open(out, encoding="utf-8") as report:
            document = json.load(report)
        self.assertEqual(document["representatives"], [])
        self.assertTrue(document["note"].startswith("degenerate"))


class TestMain(TestCase):
    """Exit codes of the entry point."""

    def test_exit_codes(self):
        """0 on success, 2 on errors."""
        tmp = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, tmp)
        out = os.path.join(tmp, "report.json")
        self.assertEqual(main(["check", "--instance", "i5", "--checks", "prop3.1", "--out", out]), EXIT_OK)
        self.assertEqual(main(["check", "--instance", "i4", "--out", out]), EXIT_ERROR)

    def test_usage_error(self):
        """Missing subcommands are usage errors."""
        with self.assertRaises(SystemExit) as raised:
            main([])
        self.assertEqual(raised.exception.code, 2)

    def test_wrongly_typed_instance_fields(self):
        """Config files with wrongly typed instance parameters exit 2 with a diagnostic naming the parameter."""
        tmp = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, tmp)
        cases = {
            "base": {"kind": "trivial_strong", "params": {"base": 4}},
            "inst": {"kind": "direct_sum", "params": {"inst": 5}},
            "inst.kind": {"kind": "direct_sum", "params": {"inst": {"kind": 3}}},
            "inst.params": {"kind": "direct_sum", "params": {"inst": {"kind": "zmod_padic", "params": [1]}}},
        }
        for name, instance in cases.items():
            with self.subTest(field=name):
                config = os.path.join(tmp, "run.json")
                with open(config, "w", encoding="utf-8") as config_file:
                    json.dump({"instance": instance, "checks": ["def2.2"]}, config_file)
                stdout = io.StringIO()
                event = ValuationCli(stdout=stdout).dispatch("check", {"config": config})
                self.assertEqual(event.exit_code, EXIT_ERROR)
                self.assertIn(f"parameter {name} of ", event.failure)
                self.assertEqual(main(["check", "--config", config, "--out", os.path.join(tmp, "r.json")]), EXIT_ERROR)
