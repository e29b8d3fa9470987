# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

import argparse
import sys
from pathlib import Path

import yaml

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from config import parse_config  # noqa: E402
from runner import ClaimRunner  # noqa: E402
from util.golden import compare  # noqa: E402
from util.oracle import ORACLE_CLAIMS, Oracle  # noqa: E402
from util.replay import replay_document  # noqa: E402
from util.report import build_document, render  # noqa: E402

GOLDEN_DIR = ROOT / "tests" / "data" / "golden"
PROVENANCE = (
    "exhaustive; derived from the definitions, "
    "cross-checked by scripts/regenerate_goldens.py --check against the brute-force oracle"
)


def oracle_disagreements(instance, reports, n_max):
    oracle = Oracle(instance, n_max)
    disagreements = []
    for report in reports:
        if report.claim_id not in ORACLE_CLAIMS:
            continue
        expected = oracle.evaluate(report.claim_id)
        if (report.verdict.value, report.witness) != (expected.verdict, expected.witness):
            disagreements.append(f"{report.claim_id}: checker {report.to_dict()} oracle {expected._asdict()}")
    return disagreements


def main(golden_dir, check_only):
    with open(golden_dir / "goldens.yaml") as manifest:
        goldens = yaml.safe_load(manifest)
    failed = False
    for name, entry in goldens.items():
        config = parse_config(entry)
        instance = config.build_instance()
        strategy = config.strategy.to_strategy()
        reports = ClaimRunner(instance, strategy, config.n_max).run_all(config.claims())
        document = build_document(instance.instance_id, strategy, reports, 0, {"provenance": PROVENANCE})
        problems = oracle_disagreements(instance, reports, config.n_max) if instance.finite else []
        problems += replay_document(document, instance)
        if problems:
            print(f"{name}: not written")
            for problem in problems:
                print(f"  {problem}")
            failed = True
            continue
        path = golden_dir / name
        if check_only:
            diff = compare(document, str(path))
            print(f"{name}: {'differs' if diff else 'matches'}")
            sys.stdout.writelines(diff)
            failed = failed or bool(diff)
            continue
        path.write_text(render(document), encoding="utf-8")
        print(f"{name}: written")
    return 1 if failed else 0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Regenerate golden reports after oracle and replay checks")
    parser.add_argument("-d", "--golden-dir", default=str(GOLDEN_DIR), help="directory holding goldens.yaml")
    parser.add_argument("--check", action="store_true", help="compare with the committed goldens, write nothing")
    args = parser.parse_args()

    sys.exit(main(Path(args.golden_dir), args.check))
