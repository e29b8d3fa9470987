# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Ring and module law self-test of an instance's carriers."""

import itertools
import logging
from typing import TYPE_CHECKING, Callable, Dict, Iterable, List, Optional, Tuple

from constants.defaults import STRUCTURE_TRIPLE_BUDGET
from constants.statuses import SAMPLED_TRIPLES
from search import CheckReport, Judgement, SearchSpace, SearchStrategy

if TYPE_CHECKING:
    from algebra import ModuleCarrier, RingCarrier
    from instances import FilteredInstance

logger = logging.getLogger(__name__)


def ring_laws(ring: "RingCarrier") -> Dict[str, Callable]:
    """Laws over ring triples (a, b, c)."""
    add, mul = ring.add, ring.multiply
    return {
        "additive associativity": lambda a, b, c: add(add(a, b), c) == add(a, add(b, c)),
        "additive commutativity": lambda a, b, c: add(a, b) == add(b, a),
        "additive identity": lambda a, b, c: add(a, ring.zero) == a,
        "additive inverse": lambda a, b, c: add(a, ring.negate(a)) == ring.zero,
        "multiplicative associativity": lambda a, b, c: mul(mul(a, b), c) == mul(a, mul(b, c)),
        "multiplicative commutativity": lambda a, b, c: mul(a, b) == mul(b, a),
        "multiplicative identity": lambda a, b, c: mul(ring.one, a) == a,
        "left distributivity": lambda a, b, c: mul(a, add(b, c)) == add(mul(a, b), mul(a, c)),
        "right distributivity": lambda a, b, c: mul(add(a, b), c) == add(mul(a, c), mul(b, c)),
    }


def module_additive_laws(module: "ModuleCarrier") -> Dict[str, Callable]:
    """Laws over module triples (x, y, z)."""
    add = module.add
    return {
        "module additive associativity": lambda x, y, z: add(add(x, y), z) == add(x, add(y, z)),
        "module additive commutativity": lambda x, y, z: add(x, y) == add(y, x),
        "module additive identity": lambda x, y, z: add(x, module.zero) == x,
        "module additive inverse": lambda x, y, z: add(x, module.negate(x)) == module.zero,
    }


def scalar_laws(module: "ModuleCarrier") -> Dict[str, Callable]:
    """Laws over mixed triples (r, s, x)."""
    ring, act = module.ring, module.act
    return {
        "action over ring addition": lambda r, s, x: act(ring.add(r, s), x) == module.add(act(r, x), act(s, x)),
        "action compatibility": lambda r, s, x: act(ring.multiply(r, s), x) == act(r, act(s, x)),
        "unital action": lambda r, s, x: act(ring.one, x) == x,
    }


def vector_laws(module: "ModuleCarrier") -> Dict[str, Callable]:
    """Laws over mixed triples (r, x, y)."""
    act = module.act
    return {
        "action over module addition": lambda r, x, y: act(r, module.add(x, y)) == module.add(act(r, x), act(r, y)),
    }


class StructureChecker:
    """Runs each law group over its triples, sampling groups above the triple budget."""

    def __init__(self, instance: "FilteredInstance", strategy: SearchStrategy):
        self.instance = instance
        self.strategy = strategy
        self.space = SearchSpace(instance, strategy, "structure")
        self.sampled: List[str] = []

    def _triples(self, group: str, pools: Tuple[tuple, tuple, tuple]) -> Iterable[tuple]:
        total = len(pools[0]) * len(pools[1]) * len(pools[2])
        if total <= STRUCTURE_TRIPLE_BUDGET:
            return itertools.product(*pools)
        rng = self.strategy.rng(f"structure:{group}")
        picks = sorted(rng.sample(range(total), STRUCTURE_TRIPLE_BUDGET))
        logger.warning(
            "%s: %s group too large, sampling %d of %d triples", self.instance.instance_id, group, len(picks), total
        )
        self.sampled.append(SAMPLED_TRIPLES.format(taken=len(picks), total=total))
        return (self._unrank(pools, index) for index in picks)

    @staticmethod
    def _unrank(pools, index: int) -> tuple:
        _, second, third = pools
        i, rest = divmod(index, len(second) * len(third))
        j, k = divmod(rest, len(third))
        return pools[0][i], second[j], third[k]

    def _scan(self, group: str, laws: Dict[str, Callable], pools, roles: Tuple[str, str, str], formats):
        for triple in self._triples(group, pools):
            for law, holds in laws.items():
                if not holds(*triple):
                    witness = {"law": law}
                    witness.update({role: fmt(value) for role, fmt, value in zip(roles, formats, triple)})
                    return witness
        return None

    def run(self) -> CheckReport:
        """Check every law group in order; the first violated law wins."""
        judgement = Judgement("structure", self.strategy)
        instance = self.instance
        rp = self.space.ring_elements(3)
        mp = self.space.module_elements(3)
        fr, fm = instance.format_scalar, instance.format
        groups = (
            ("ring", ring_laws(instance.ring), (rp, rp, rp), ("a", "b", "c"), (fr, fr, fr)),
            ("module", module_additive_laws(instance.module), (mp, mp, mp), ("x", "y", "z"), (fm, fm, fm)),
            ("scalar", scalar_laws(instance.module), (rp, rp, mp), ("r", "s", "x"), (fr, fr, fm)),
            ("vector", vector_laws(instance.module), (rp, mp, mp), ("r", "x", "y"), (fr, fm, fm)),
        )
        for group, laws, pools, roles, formats in groups:
            witness: Optional[dict] = self._scan(group, laws, pools, roles, formats)
            if witness is not None:
                return judgement.fail(**witness)
        return judgement.passed("; ".join(self.sampled) if self.sampled else None)


def self_test_structure(instance: "FilteredInstance", strategy: SearchStrategy) -> CheckReport:
    """Verify associativity, distributivity, identity and action laws on the carriers."""
    return StructureChecker(instance, strategy).run()
