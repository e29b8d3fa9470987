# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Golden report comparison."""

import difflib
import logging
from typing import Any, Dict, List

from util.report import comparable_body, read_report, render

logger = logging.getLogger(__name__)


def compare(document: Dict[str, Any], golden_path: str) -> List[str]:
    """Unified diff between the comparable bodies of a report and a golden file.

    Returns:
        diff lines, empty when the bodies render to identical bytes.
    """
    expected = render(comparable_body(read_report(golden_path))).splitlines(keepends=True)
    actual = render(comparable_body(document)).splitlines(keepends=True)
    diff = list(difflib.unified_diff(expected, actual, fromfile=golden_path, tofile="report"))
    if diff:
        logger.debug("golden mismatch against %s: %d diff lines", golden_path, len(diff))
    return diff
