# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Integration tests configuration helpers and fixtures."""

import logging
from pathlib import Path

import pytest
import yaml

from instances import get_instance
from valuation import valuation_suite

LOGGER = logging.getLogger(__name__)

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "data" / "golden"


def golden_manifest():
    """Golden file names and the run configuration each one pins."""
    with open(GOLDEN_DIR / "goldens.yaml", encoding="utf-8") as manifest:
        return yaml.safe_load(manifest)


def clear_caches():
    """Forget shared instances and valuation suites, as a fresh process would."""
    valuation_suite.cache_clear()
    get_instance.cache_clear()


@pytest.fixture(name="report_path")
def report_path_fixture(tmp_path: Path) -> Path:
    """Fresh report path per test."""
    path = tmp_path / "report.json"
    LOGGER.info("Writing report to %s", path)
    return path
