# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Filtrations as level-membership oracles, and the filtered and strong filtration checks."""

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Dict, FrozenSet, Optional, Sequence, Tuple

from algebra import Carrier, Encoding
from constants.statuses import LEVELS_CHECKED, NO_GENERATORS
from search import CheckReport, Judgement, SearchSpace, SearchStrategy, Verdict

if TYPE_CHECKING:
    from instances import FilteredInstance

logger = logging.getLogger(__name__)

ITEMS = ("i", "ii", "iii")


@dataclass(frozen=True)
class Filtration:
    """A descending family of additive subgroups, answered one membership at a time.

    Attrs:
        level_member: whether an encoding lies in a level.
        depth_hint: level from which the filtration is known constant.
        stabilizes_to_zero: whether the intersection of all levels is {0}.
        generators: additive generators of a level, for carriers that cannot be enumerated.
    """

    level_member: Callable[[Encoding, int], bool]
    depth_hint: Optional[int] = None
    stabilizes_to_zero: bool = False
    generators: Optional[Callable[[int], Tuple[Encoding, ...]]] = None

    def level_set(self, carrier: Carrier, level: int) -> FrozenSet[Encoding]:
        """Every element of a finite carrier lying in a level."""
        return frozenset(x for x in carrier.elements if self.level_member(x, level))


@dataclass(frozen=True)
class _Side:
    prefix: str
    carrier: Carrier
    filtration: Filtration
    product: Callable[[Encoding, Encoding], Encoding]
    left: str
    right: str


def _side(instance: "FilteredInstance", side: str) -> _Side:
    if side == "ring":
        return _Side("def2.1", instance.ring, instance.ring_filtration, instance.ring.multiply, "r", "s")
    return _Side("def2.3", instance.module, instance.module_filtration, instance.module.act, "r", "x")


class FiltrationChecker:
    """Checks items i to iii of a filtered ring (side "ring") or filtered module (side "module")."""

    def __init__(self, instance: "FilteredInstance", strategy: SearchStrategy, side: str):
        self.instance = instance
        self.strategy = strategy
        self.side = _side(instance, side)
        self.space = SearchSpace(instance, strategy, f"{self.side.prefix}")
        self.pool = self.space.module_elements(2) if side == "module" else self.space.ring_elements(2)
        self.scalars = self.space.ring_elements(2)
        self.levels = self.space.levels()

    def _fmt(self, x: Encoding) -> str:
        return self.side.carrier.format(x)

    def check_item_i(self) -> CheckReport:
        """Level 0 is the whole carrier."""
        judgement = Judgement(f"{self.side.prefix}.i", self.strategy)
        for x in self.pool:
            if not self.side.filtration.level_member(x, 0):
                return judgement.fail(x=self._fmt(x))
        return judgement.passed()

    def check_item_ii(self) -> CheckReport:
        """Levels are antitone and every level is an additive subgroup."""
        judgement = Judgement(f"{self.side.prefix}.ii", self.strategy)
        member = self.side.filtration.level_member
        carrier = self.side.carrier
        for x in self.pool:
            for n in self.levels[:-1]:
                if member(x, n + 1) and not member(x, n):
                    return judgement.fail(x=self._fmt(x), level=n)
        for n in self.levels:
            if not member(carrier.zero, n):
                return judgement.fail(law="zero", level=n)
            members = [x for x in self.pool if member(x, n)]
            for x, y in itertools.product(members, repeat=2):
                if not member(carrier.add(x, y), n):
                    return judgement.fail(law="sum", level=n, x=self._fmt(x), y=self._fmt(y))
            for x in members:
                if not member(carrier.negate(x), n):
                    return judgement.fail(law="negation", level=n, x=self._fmt(x))
        return judgement.passed()

    def check_item_iii(self) -> CheckReport:
        """Products of level n scalars with level m elements land in level n+m."""
        judgement = Judgement(f"{self.side.prefix}.iii", self.strategy)
        side = self.side
        top = 2 * self.levels[-1]
        scalar_levels = self._level_sets(self.instance.ring_filtration, self.scalars)
        target_levels: Dict[Encoding, FrozenSet[int]] = {}
        sums: Dict[Tuple[FrozenSet[int], FrozenSet[int]], FrozenSet[int]] = {}
        own_levels = self._level_sets(side.filtration, self.pool)
        for r, x in itertools.product(self.scalars, self.pool):
            key = (scalar_levels[r], own_levels[x])
            if key not in sums:
                sums[key] = frozenset(n + m for n in key[0] for m in key[1])
            product = side.product(r, x)
            if product not in target_levels:
                member = side.filtration.level_member
                target_levels[product] = frozenset(n for n in range(top + 1) if member(product, n))
            if sums[key] <= target_levels[product]:
                continue
            for n, m in itertools.product(sorted(key[0]), sorted(key[1])):
                if n + m not in target_levels[product]:
                    return judgement.fail(
                        **{side.left: self.instance.format_scalar(r), side.right: self._fmt(x), "n": n, "m": m}
                    )
        return judgement.passed()

    def _level_sets(self, filtration: Filtration, pool: Sequence[Encoding]) -> Dict[Encoding, FrozenSet[int]]:
        # Only levels within the scanned range act as hypotheses.
        return {x: frozenset(n for n in self.levels if filtration.level_member(x, n)) for x in pool}

    def check(self, item: Optional[str] = None) -> CheckReport:
        """One item, or every item with the first failing one reported."""
        if item is not None:
            return getattr(self, f"check_item_{item}")()
        for each in ITEMS:
            report = getattr(self, f"check_item_{each}")()
            if report.verdict != Verdict.PASS:
                return report
        logger.info("%s: %s PASS", self.instance.instance_id, self.side.prefix)
        return Judgement(self.side.prefix, self.strategy).passed()


def check_filtered_ring(
    instance: "FilteredInstance", strategy: SearchStrategy, item: Optional[str] = None
) -> CheckReport:
    """Check R_0 = R, R_{n+1} within R_n and R_n R_m within R_{n+m}."""
    return FiltrationChecker(instance, strategy, "ring").check(item)


def check_filtered_module(
    instance: "FilteredInstance", strategy: SearchStrategy, item: Optional[str] = None
) -> CheckReport:
    """Check M_0 = M, M_{n+1} within M_n and R_n M_m within M_{n+m}."""
    return FiltrationChecker(instance, strategy, "module").check(item)


class StrongChecker:
    """Compares the subgroup generated by level n times level m products with level n+m."""

    def __init__(self, instance: "FilteredInstance", strategy: SearchStrategy, side: str):
        self.instance = instance
        self.strategy = strategy
        self.side = _side(instance, side)
        self.claim_id = "def2.2" if side == "ring" else "def2.4"
        self.space = SearchSpace(instance, strategy, self.claim_id)
        self.levels = self.space.levels()

    def check(self) -> CheckReport:
        """Both inclusions for every level pair."""
        if self.instance.finite:
            return self._check_finite()
        return self._check_generated()

    def _check_finite(self) -> CheckReport:
        judgement = Judgement(self.claim_id, self.strategy)
        side, ring = self.side, self.instance.ring
        ring_sets = {n: self.instance.ring_filtration.level_set(ring, n) for n in self.levels}
        own_sets = {n: side.filtration.level_set(side.carrier, n) for n in self.levels}
        ring_bases = {n: ring.basis(sorted(ring_sets[n], key=ring.order_key))[0] for n in self.levels}
        own_bases = {n: side.carrier.basis(sorted(own_sets[n], key=side.carrier.order_key))[0] for n in self.levels}
        key = side.carrier.order_key
        for n, m in itertools.product(self.levels, repeat=2):
            products = [side.product(r, x) for r in ring_bases[n] for x in own_bases[m]]
            generated = side.carrier.span(products)
            target = side.filtration.level_set(side.carrier, n + m)
            extra = sorted(generated - target, key=key)
            if extra:
                return judgement.fail(n=n, m=m, x=side.carrier.format(extra[0]), law="inclusion")
            missing = sorted(target - generated, key=key)
            if missing:
                return judgement.fail(n=n, m=m, x=side.carrier.format(missing[0]), law="generation")
        return judgement.passed()

    def _check_generated(self) -> CheckReport:
        judgement = Judgement(self.claim_id, self.strategy)
        side = self.side
        ring_gens = self.instance.ring_filtration.generators
        own_gens = side.filtration.generators
        if ring_gens is None or own_gens is None:
            return judgement.inconclusive(NO_GENERATORS)
        for n, m in itertools.product(self.levels, repeat=2):
            products = [side.product(r, x) for r in ring_gens(n) for x in own_gens(m)]
            for p in products:
                if not side.filtration.level_member(p, n + m):
                    return judgement.fail(n=n, m=m, x=side.carrier.format(p), law="inclusion")
            for t in own_gens(n + m):
                if not side.carrier.span_contains(products, t):
                    return judgement.fail(n=n, m=m, x=side.carrier.format(t), law="generation")
        return judgement.passed(LEVELS_CHECKED.format(bound=self.levels[-1]))


def check_strong(instance: "FilteredInstance", strategy: SearchStrategy, side: str = "ring") -> CheckReport:
    """Check R_n R_m = R_{n+m} (side "ring") or R_n M_m = M_{n+m} (side "module")."""
    return StrongChecker(instance, strategy, side).check()
