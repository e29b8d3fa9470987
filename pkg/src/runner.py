# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Runs claims against one instance in canonical order, sharing work between them."""

import functools
import logging
import time
from typing import TYPE_CHECKING, Callable, Dict, Iterable, List, Tuple

from capability import requires_enumeration
from constants.claims import CLAIMS
from constants.defaults import DEFAULT_N_MAX
from constants.errors import UNKNOWN_CLAIM
from exceptions import CapabilityError, ConfigError
from filtration import check_filtered_module, check_filtered_ring, check_strong
from search import EXHAUSTIVE, CheckReport, Judgement, SearchStrategy
from skeleton import Skeleton, SkeletonSuite, skeleton_suite
from structure import self_test_structure
from valuation import ValuationSuite, check_prop21, valuation_suite

if TYPE_CHECKING:
    from instances import FilteredInstance

logger = logging.getLogger(__name__)


class ClaimRunner:
    """Memoised claim dispatch for one instance and strategy.

    Claims that depend on other claims (cor3.1, prop3.1) look them up through
    the same runner, so every claim is computed at most once per run.
    """

    def __init__(
        self, instance: "FilteredInstance", strategy: SearchStrategy = EXHAUSTIVE, n_max: int = DEFAULT_N_MAX
    ):
        self.instance = instance
        self.strategy = strategy
        self.n_max = n_max
        self._reports: Dict[str, CheckReport] = {}

    @functools.cached_property
    def valuation(self) -> ValuationSuite:
        """Valuation suite shared by the valuation claims."""
        return valuation_suite(self.instance, self.strategy)

    @functools.cached_property
    def skeletons(self) -> SkeletonSuite:
        """Skeleton suite shared by the skeleton claims."""
        return skeleton_suite(self.instance, self.strategy)

    @functools.cached_property
    def skeleton(self) -> Skeleton:
        """Skeleton of the valuation search space."""
        return self.skeletons.compute_skeleton()

    @functools.cached_property
    def _prop33(self) -> Tuple[CheckReport, CheckReport]:
        return self.skeletons.check_prop33(self.skeleton)

    def _handler(self, claim: str) -> Callable[[], CheckReport]:
        instance, strategy = self.instance, self.strategy
        prefix, _, item = claim.rpartition(".")
        if prefix == "def2.1":
            return lambda: check_filtered_ring(instance, strategy, item)
        if prefix == "def2.3":
            return lambda: check_filtered_module(instance, strategy, item)
        if prefix == "prop2.1":
            return lambda: check_prop21(instance, item, strategy)
        handlers: Dict[str, Callable[[], CheckReport]] = {
            "structure": lambda: self_test_structure(instance, strategy),
            "def2.2": lambda: check_strong(instance, strategy, "ring"),
            "def2.4": lambda: check_strong(instance, strategy, "module"),
            "lemma3.1": lambda: self.valuation.lemma31(),
            "def2.5.i": lambda: self.valuation.axiom_i(),
            "def2.5.ii": lambda: self.valuation.axiom_ii(),
            "def2.5.iii": lambda: self.valuation.axiom_iii(),
            "def2.5.iv": lambda: self.valuation.axiom_iv(),
            "def2.5.onto": lambda: self.valuation.onto(),
            "cor3.1": lambda: self.valuation.axioms_imply_properties(self.run),
            "prop3.1": lambda: self.valuation.strong_implies_trivial(self.run),
            "def2.6": lambda: self.skeletons.relation_report(),
            "def2.7": lambda: self.skeletons.check_nu_independent(self.skeleton.representatives),
            "prop3.3.i": lambda: self._prop33[0],
            "prop3.3.ii": lambda: self._prop33[1],
            "prop3.4": lambda: self.skeletons.check_prop34(self.skeleton, self.n_max),
        }
        return handlers[claim]

    @requires_enumeration
    def run(self, claim: str) -> CheckReport:
        """Report of one claim, computed on first request.

        A claim that needs a capability the instance lacks is reported
        INCONCLUSIVE with the reason as its note.

        Raises:
            ConfigError: for a claim id outside the vocabulary.
            CapabilityError: for an exhaustive strategy on an infinite instance.
        """
        if claim not in CLAIMS:
            raise ConfigError(UNKNOWN_CLAIM.format(claim=claim), "checks")
        report = self._reports.get(claim)
        if report is not None:
            return report
        start = time.monotonic()
        try:
            report = self._handler(claim)()
        except CapabilityError as exc:
            logger.warning("%s on %s: %s", claim, self.instance.instance_id, exc)
            report = Judgement(claim, self.strategy).inconclusive(str(exc))
        self._reports[claim] = report
        logger.info(
            "%s on %s: %s (%.0f ms)",
            claim,
            self.instance.instance_id,
            report.verdict.value,
            (time.monotonic() - start) * 1000,
        )
        return report

    @requires_enumeration
    def run_all(self, claims: Iterable[str] = CLAIMS) -> List[CheckReport]:
        """Reports of the given claims, in canonical order.

        Raises:
            ConfigError: for a claim id outside the vocabulary.
            CapabilityError: for an exhaustive strategy on an infinite instance.
        """
        requested = set(claims)
        unknown = sorted(requested.difference(CLAIMS))
        if unknown:
            raise ConfigError(UNKNOWN_CLAIM.format(claim=unknown[0]), "checks")
        return [self.run(claim) for claim in CLAIMS if claim in requested]
