# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Search strategies, verdict reports and the element spaces a check quantifies over."""

import logging
import math
import random
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, Optional, Tuple

from constants.defaults import DEFAULT_LEVEL_BOUND, DEFAULT_SAMPLES, DEFAULT_SEED, LEVEL_MARGIN
from constants.errors import EXHAUSTIVE_ON_INFINITE
from constants.statuses import TAINTED
from exceptions import CapabilityError

if TYPE_CHECKING:
    from instances import FilteredInstance
    from valuation import DerivedValuation

logger = logging.getLogger(__name__)


class StrategyKind(str, Enum):
    """How a check quantifies over the carriers."""

    EXHAUSTIVE = "exhaustive"
    BOUNDED_RANDOM = "bounded_random"


@dataclass(frozen=True)
class SearchStrategy:
    """Exhaustive enumeration or seeded bounded sampling.

    Attrs:
        kind: exhaustive or bounded_random.
        seed: seed of every sampler derived from this strategy.
        samples: sample budget per quantified tuple.
        level_bound: highest level scanned on infinite instances.
    """

    kind: StrategyKind = StrategyKind.EXHAUSTIVE
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    level_bound: int = DEFAULT_LEVEL_BOUND

    @property
    def exhaustive(self) -> bool:
        """Report whether this strategy enumerates whole carriers."""
        return self.kind == StrategyKind.EXHAUSTIVE

    def echo(self) -> Dict[str, Any]:
        """Strategy as recorded in reports."""
        if self.exhaustive:
            return {"kind": self.kind.value}
        return {
            "kind": self.kind.value,
            "level_bound": self.level_bound,
            "samples": self.samples,
            "seed": self.seed,
        }

    def rng(self, salt: str) -> random.Random:
        """A generator that replays identically for equal seed and salt."""
        return random.Random(f"{self.seed}:{salt}")  # nosec


EXHAUSTIVE = SearchStrategy()


class Verdict(str, Enum):
    """Outcome of one claim."""

    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class CheckReport:
    """One claim's verdict.

    Attrs:
        claim_id: claim from the frozen vocabulary.
        verdict: PASS, FAIL or INCONCLUSIVE.
        strategy: strategy the claim was checked with.
        witness: canonical strings and levels reproducing a FAIL.
        tainted: whether a capped infinity was involved.
        note: optional qualifier.
    """

    claim_id: str
    verdict: Verdict
    strategy: SearchStrategy
    witness: Optional[Dict[str, Any]] = None
    tainted: bool = False
    note: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """Report entry as written to the report document."""
        entry: Dict[str, Any] = {
            "claim_id": self.claim_id,
            "verdict": self.verdict.value,
            "tainted": self.tainted,
        }
        if self.witness is not None:
            entry["witness"] = self.witness
        if self.note is not None:
            entry["note"] = self.note
        return entry


class Judgement:
    """Builds the report of one claim and keeps capped infinities out of PASS and FAIL.

    The derived valuation counts every capped infinity it hands out, cached
    tables read back included; a judgement compares the count before and
    after the check.
    """

    def __init__(self, claim_id: str, strategy: SearchStrategy, valuation: Optional["DerivedValuation"] = None):
        self.claim_id = claim_id
        self.strategy = strategy
        self.valuation = valuation
        self._taint_start = valuation.taint_hits if valuation is not None else 0

    @property
    def tainted(self) -> bool:
        """Report whether a capped infinity was produced during the check."""
        return self.valuation is not None and self.valuation.taint_hits > self._taint_start

    def _report(self, verdict: Verdict, witness=None, note=None) -> CheckReport:
        logger.debug("%s: %s", self.claim_id, verdict.value)
        return CheckReport(self.claim_id, verdict, self.strategy, witness, self.tainted, note)

    def fail(self, note: Optional[str] = None, **witness) -> CheckReport:
        """FAIL with a witness, or INCONCLUSIVE when the violation rests on a capped infinity."""
        if self.tainted:
            return self._report(Verdict.INCONCLUSIVE, witness, TAINTED)
        return self._report(Verdict.FAIL, witness, note)

    def passed(self, note: Optional[str] = None) -> CheckReport:
        """PASS, or INCONCLUSIVE when a capped infinity was involved."""
        if self.tainted:
            return self._report(Verdict.INCONCLUSIVE, None, TAINTED)
        return self._report(Verdict.PASS, None, note)

    def inconclusive(self, note: Optional[str] = None) -> CheckReport:
        """INCONCLUSIVE."""
        return self._report(Verdict.INCONCLUSIVE, None, note)


class SearchSpace:
    """Element tuples and levels a check quantifies over.

    Exhaustive strategies use the whole finite carrier; bounded random ones
    use the carrier probes plus seeded samples, sorted in element order so
    that the first violation found is the least one among those drawn.
    """

    def __init__(self, instance: "FilteredInstance", strategy: SearchStrategy, salt: str):
        if strategy.exhaustive and not instance.finite:
            raise CapabilityError(EXHAUSTIVE_ON_INFINITE.format(instance=instance.instance_id))
        self.instance = instance
        self.strategy = strategy
        self.salt = salt
        self._pools: Dict[Tuple[str, int], Tuple[Any, ...]] = {}

    def _pool(self, side: str, arity: int) -> Tuple[Any, ...]:
        if (side, arity) not in self._pools:
            self._pools[(side, arity)] = self._draw(side, arity)
        return self._pools[(side, arity)]

    def _draw(self, side: str, arity: int) -> Tuple[Any, ...]:
        carrier = self.instance.ring if side == "ring" else self.instance.module
        if self.strategy.exhaustive:
            return carrier.elements
        per_coordinate = max(2, math.isqrt(self.strategy.samples) if arity > 1 else self.strategy.samples)
        rng = self.strategy.rng(f"{self.salt}:{side}")
        sampler = self.instance.sample_ring if side == "ring" else self.instance.sample_module
        drawn = set(carrier.probes(min(per_coordinate, 8)))
        while len(drawn) < per_coordinate:
            before = len(drawn)
            for _ in range(per_coordinate):
                drawn.add(sampler(rng))
            if len(drawn) == before:
                break
        return tuple(sorted(drawn, key=carrier.order_key))

    def ring_elements(self, arity: int = 1) -> Tuple[Any, ...]:
        """Ring encodings for a quantifier of the given arity."""
        return self._pool("ring", arity)

    def module_elements(self, arity: int = 1) -> Tuple[Any, ...]:
        """Module encodings for a quantifier of the given arity."""
        return self._pool("module", arity)

    def levels(self) -> range:
        """Levels scanned: stabilization depth plus a margin, or the strategy's level bound."""
        if self.strategy.exhaustive:
            return range(self.instance.stabilization_depth + LEVEL_MARGIN + 1)
        return range(self.strategy.level_bound + 1)
