# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Skeletons of the derived valuation, nu-independence and the representative checks.

Two elements x, y off the core are related when nu(x) lies in nu(Ry) and
nu(y) lies in nu(Rx). That relation only sees an element through its
signature (nu(x), nu(Rx)), so the partition is computed over signatures.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, Iterable, List, Optional, Sequence, Tuple

from algebra import Element, Encoding, ExtendedValue
from capability import requires_finite
from constants.defaults import DEFAULT_N_MAX
from constants.errors import INEXACT_ORBITS, INFINITE_ELEMENT
from constants.statuses import ADOPTED_RELATION
from exceptions import CapabilityError, InfiniteElementError
from search import EXHAUSTIVE, CheckReport, SearchStrategy
from valuation import ValueSet, valuation_suite

if TYPE_CHECKING:
    from instances import FilteredInstance

logger = logging.getLogger(__name__)

Signature = Tuple[ExtendedValue, ValueSet]


class UnionFind:
    """Disjoint sets with union by rank and path compression."""

    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x):
        """Root of the set holding x."""
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y) -> None:
        """Merge the sets holding x and y."""
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


@dataclass(frozen=True)
class Skeleton:
    """Representatives of the classes off the core.

    Attrs:
        representatives: least element of each class, in element order.
        class_of: representative index of every sampled element off the core.
        exact_partition: false when the relation was not transitive on the sample,
            in which case classes are connected components.
    """

    representatives: Tuple[Encoding, ...]
    class_of: Dict[Encoding, int]
    exact_partition: bool = True


class SkeletonSuite:
    """Skeleton computations of one instance, on top of its valuation suite."""

    def __init__(self, instance: "FilteredInstance", strategy: SearchStrategy = EXHAUSTIVE):
        self.instance = instance
        self.strategy = strategy
        self.valuation = valuation_suite(instance, strategy)
        self.nu = self.valuation.nu

    def signature(self, x: Encoding) -> Signature:
        """(nu(x), nu(Rx))."""
        return self.nu.value(x), self.valuation.value_orbit(x)

    @staticmethod
    def _related(s: Signature, t: Signature) -> bool:
        return s[0] in t[1] and t[0] in s[1]

    def related(self, x: Encoding, y: Encoding) -> bool:
        """nu(x) in nu(Ry) and nu(y) in nu(Rx)."""
        return self._related(self.signature(x), self.signature(y))

    def equivalent(self, x: Element, y: Element) -> bool:
        """The adopted equivalence on elements off the core.

        Raises:
            InfiniteElementError: when either element has infinite value.
        """
        encodings = (self.nu.check(x), self.nu.check(y))
        for e in encodings:
            if self.nu.value(e).is_infinite:
                raise InfiniteElementError(INFINITE_ELEMENT.format(element=self.instance.format(e)))
        return self.related(*encodings)

    def off_core(self, sample: Optional[Sequence[Encoding]] = None) -> List[Encoding]:
        """Sampled elements of finite value, in element order."""
        pool = self.valuation.module_pool if sample is None else sample
        key = self.instance.module.order_key
        return sorted((x for x in pool if not self.nu.value(x).is_infinite), key=key)

    def _groups(self, elements: Sequence[Encoding]) -> Dict[Signature, List[Encoding]]:
        groups: Dict[Signature, List[Encoding]] = {}
        for x in elements:
            signature = self.signature(x)
            if not signature[1].exact:
                raise CapabilityError(INEXACT_ORBITS.format(instance=self.instance.instance_id))
            groups.setdefault(signature, []).append(x)
        return groups

    def _intransitive(self, groups: Dict[Signature, List[Encoding]]) -> Optional[Tuple[Encoding, ...]]:
        signatures = list(groups)
        for s, t, u in itertools.product(signatures, repeat=3):
            if self._related(s, t) and self._related(t, u) and not self._related(s, u):
                return groups[s][0], groups[t][0], groups[u][0]
        return None

    def compute_skeleton(self, sample: Optional[Sequence[Encoding]] = None) -> Skeleton:
        """Partition the sample off the core and pick the least element of each class.

        Raises:
            CapabilityError: when a value orbit of the sample is not exact.
        """
        groups = self._groups(self.off_core(sample))
        signatures = list(groups)
        components = UnionFind(signatures)
        for s, t in itertools.combinations(signatures, 2):
            if self._related(s, t):
                components.union(s, t)
        key = self.instance.module.order_key
        least: Dict[Signature, Encoding] = {}
        for s in signatures:
            root = components.find(s)
            head = groups[s][0]
            if root not in least or key(head) < key(least[root]):
                least[root] = head
        representatives = tuple(sorted(least.values(), key=key))
        index = {components.find(self.signature(r)): i for i, r in enumerate(representatives)}
        class_of = {x: index[components.find(s)] for s, members in groups.items() for x in members}
        exact = self._intransitive(groups) is None
        if not exact:
            logger.warning("%s: relation is not transitive, classes are components", self.instance.instance_id)
        return Skeleton(representatives, class_of, exact)

    def relation_report(self) -> CheckReport:
        """Reflexivity, symmetry and transitivity of the adopted relation on the sample."""
        judgement = self.valuation.judgement("def2.6")
        groups = self._groups(self.off_core())
        fm = self.instance.format
        for s, members in groups.items():
            if not self._related(s, s):
                return judgement.fail(ADOPTED_RELATION, law="reflexive", x=fm(members[0]))
        for s, t in itertools.product(groups, repeat=2):
            if self._related(s, t) != self._related(t, s):
                return judgement.fail(ADOPTED_RELATION, law="symmetric", x=fm(groups[s][0]), y=fm(groups[t][0]))
        triple = self._intransitive(groups)
        if triple is not None:
            x, y, z = (fm(e) for e in triple)
            return judgement.fail(ADOPTED_RELATION, law="transitive", x=x, y=y, z=z)
        return judgement.passed(ADOPTED_RELATION)

    def check_nu_independent(self, subset: Sequence[Encoding], claim_id: str = "def2.7") -> CheckReport:
        """No element of the core, and nu(x) outside nu(Ry) for distinct x, y."""
        judgement = self.valuation.judgement(claim_id)
        fm = self.instance.format
        for x in subset:
            if self.nu.value(x).is_infinite:
                return judgement.fail(ADOPTED_RELATION, law="core", x=fm(x))
        for x, y in itertools.permutations(subset, 2):
            if self.nu.value(x) in self.valuation.value_orbit(y):
                return judgement.fail(ADOPTED_RELATION, x=fm(x), y=fm(y))
        return judgement.passed(ADOPTED_RELATION)

    def check_prop33(self, skeleton: Skeleton) -> Tuple[CheckReport, CheckReport]:
        """Item i: the representatives are nu-independent. Item ii: each x matches exactly one."""
        first = self.check_nu_independent(skeleton.representatives, "prop3.3.i")
        judgement = self.valuation.judgement("prop3.3.ii")
        fm = self.instance.format
        orbits = [self.valuation.value_orbit(r) for r in skeleton.representatives]
        for x in self.off_core():
            v = self.nu.value(x)
            matches = [fm(r) for r, orbit in zip(skeleton.representatives, orbits) if v in orbit]
            if len(matches) != 1:
                return first, judgement.fail(ADOPTED_RELATION, x=fm(x), matches=matches)
        return first, judgement.passed(ADOPTED_RELATION)

    @requires_finite
    def check_prop34(self, skeleton: Skeleton, n_max: int = DEFAULT_N_MAX) -> CheckReport:
        """Vanishing combinations of distinct representatives have coefficients in (core : M).

        Coefficient tuples run in product order; the last coefficient is read
        off a table of solutions of a*r = t instead of being enumerated.

        Raises:
            CapabilityError: on infinite instances.
        """
        instance = self.instance
        judgement = self.valuation.judgement("prop3.4")
        ring, module = instance.ring, instance.module
        core_colon = self.valuation.colon(self.valuation.core)
        solutions: Dict[Encoding, Dict[Encoding, List[Encoding]]] = {}
        for r in skeleton.representatives:
            table: Dict[Encoding, List[Encoding]] = {}
            for a in ring.elements:
                table.setdefault(module.act(a, r), []).append(a)
            solutions[r] = table
        for size in range(1, n_max + 1):
            for chosen in itertools.combinations(skeleton.representatives, size):
                *head, last = chosen
                for prefix in itertools.product(ring.elements, repeat=size - 1):
                    partial = module.zero
                    for a, r in zip(prefix, head):
                        partial = module.add(partial, module.act(a, r))
                    for a_last in solutions[last].get(module.negate(partial), ()):
                        coefficients = prefix + (a_last,)
                        if all(a in core_colon for a in coefficients):
                            continue
                        return judgement.fail(
                            ADOPTED_RELATION,
                            representatives=[instance.format(r) for r in chosen],
                            coefficients=[instance.format_scalar(a) for a in coefficients],
                        )
        return judgement.passed(ADOPTED_RELATION)


def skeleton_suite(instance: "FilteredInstance", strategy: SearchStrategy = EXHAUSTIVE) -> SkeletonSuite:
    """Skeleton suite sharing the valuation suite of an instance and strategy."""
    return SkeletonSuite(instance, strategy)


def equivalent(instance: "FilteredInstance", x: Element, y: Element) -> bool:
    """x ~ y under the adopted relation."""
    return skeleton_suite(instance).equivalent(x, y)


def compute_skeleton(
    instance: "FilteredInstance", sample: Optional[Sequence[Encoding]] = None, strategy: SearchStrategy = EXHAUSTIVE
) -> Skeleton:
    """Skeleton of the sample (the whole carrier by default on finite instances)."""
    return skeleton_suite(instance, strategy).compute_skeleton(sample)


def check_nu_independent(
    instance: "FilteredInstance", subset: Sequence[Element], strategy: SearchStrategy = EXHAUSTIVE
) -> CheckReport:
    """Check nu-independence of a list of elements."""
    suite = skeleton_suite(instance, strategy)
    return suite.check_nu_independent([suite.nu.check(x) for x in subset])


def check_prop33(
    instance: "FilteredInstance", skeleton: Skeleton, strategy: SearchStrategy = EXHAUSTIVE
) -> Tuple[CheckReport, CheckReport]:
    """Check both items on a skeleton."""
    return skeleton_suite(instance, strategy).check_prop33(skeleton)


def check_prop34(
    instance: "FilteredInstance", skeleton: Skeleton, n_max: int = DEFAULT_N_MAX, strategy: SearchStrategy = EXHAUSTIVE
) -> CheckReport:
    """Check vanishing combinations of up to n_max representatives."""
    return skeleton_suite(instance, strategy).check_prop34(skeleton, n_max)
