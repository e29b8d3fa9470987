# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Derived valuation of a filtered module and the checks of its valuation axioms.

The valuation is nu(t) = min{i | t in M_i minus M_{i+1}}, infinite when t lies
in every level. Checks that quantify over ring elements only see a ring
element through its profile, the tuple of values nu(a*x) over the module
search space, so they run over the least element of each profile.
"""

import dataclasses
import functools
import itertools
import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Dict, FrozenSet, Iterable, List, Optional, Tuple

from algebra import INFINITY, Element, Encoding, ExtendedValue, finite, infinite
from constants.claims import AXIOM_CLAIMS, DERIVED_CLAIMS, TRIVIALITY_HYPOTHESES
from constants.defaults import DEFAULT_LEVEL_BOUND, SCAN_LIMIT
from constants.errors import FOREIGN_ELEMENT, NO_CLOSED_FORM
from constants.statuses import (
    ADOPTED_PAIR,
    CLOSED_FORM_AGREES,
    CONCLUSION_INCONCLUSIVE,
    DEGENERATE,
    FILTRATION_TRIVIAL,
    HYPOTHESIS_INCONCLUSIVE,
    IMAGE,
    INEXACT_COLON,
    NO_UNIT_FOUND,
    VACUOUS,
)
from exceptions import CapabilityError, ForeignElementError
from search import EXHAUSTIVE, CheckReport, Judgement, SearchSpace, SearchStrategy, Verdict

if TYPE_CHECKING:
    from instances import FilteredInstance

logger = logging.getLogger(__name__)


class DerivedValuation:
    """Membership scan of the module filtration, memoised per canonical encoding.

    Attrs:
        instance: the filtered instance.
        cap: level at which a scan without a proof of infinity gives up.
        taint_hits: number of capped infinities handed out so far, reads of
            cached tables built on this valuation included.
    """

    def __init__(self, instance: "FilteredInstance", cap: int = DEFAULT_LEVEL_BOUND, cached: bool = True):
        self.instance = instance
        self.cap = cap
        self.cached = cached
        self.taint_hits = 0
        self._cache: Dict[Encoding, ExtendedValue] = {}

    def check(self, x: Element) -> Encoding:
        """Encoding of an element of this instance.

        Raises:
            ForeignElementError: when the element belongs to another instance.
        """
        if x.instance_id != self.instance.instance_id:
            raise ForeignElementError(FOREIGN_ELEMENT.format(owner=x.instance_id, instance=self.instance.instance_id))
        return x.encoding

    def nu(self, x: Element) -> ExtendedValue:
        """Value of an element."""
        return self.value(self.check(x))

    def value(self, x: Encoding) -> ExtendedValue:
        """Value of an encoding of the module carrier."""
        if not self.cached:
            result = self._scan(x)
        else:
            result = self._cache.get(x)
            if result is None:
                result = self._cache[x] = self._scan(x)
        if result.tainted:
            self.taint_hits += 1
        return result

    def reread(self, tainted: int) -> None:
        """Count capped infinities read back from a table built on this valuation."""
        self.taint_hits += tainted

    def _scan(self, x: Encoding) -> ExtendedValue:
        instance = self.instance
        member = instance.module_filtration.level_member
        if instance.stabilizes_to_zero and x == instance.module.zero:
            return INFINITY
        depth = instance.module_filtration.depth_hint
        if depth is not None:
            limit = depth
        else:
            limit = SCAN_LIMIT if instance.stabilizes_to_zero else self.cap
        for i in range(limit):
            if member(x, i) and not member(x, i + 1):
                return finite(i)
        if depth is not None:
            return INFINITY
        logger.debug("%s: scan of %s capped at level %d", instance.instance_id, instance.format(x), limit)
        return infinite(exact=False)


@dataclass(frozen=True)
class ValueSet:
    """A set of values: finite points, an optional ray [ray_from, inf) and optionally inf.

    Attrs:
        finite_points: sorted finite members.
        ray_from: start of a half-infinite ray of members.
        contains_infinity: whether inf is a member.
        exact: false for sampled under-approximations.
        tainted: whether the set was computed from a capped infinity.
    """

    finite_points: Tuple[int, ...] = ()
    ray_from: Optional[int] = None
    contains_infinity: bool = False
    exact: bool = True
    tainted: bool = dataclasses.field(default=False, compare=False)

    @classmethod
    def of(cls, values: Iterable[ExtendedValue], exact: bool = True) -> "ValueSet":
        """The finite set of the given values."""
        values = list(values)
        points = tuple(sorted({v.level for v in values if v.level is not None}))
        tainted = any(v.tainted for v in values)
        return cls(points, None, any(v.is_infinite for v in values), exact and not tainted, tainted)

    def __contains__(self, value: ExtendedValue) -> bool:
        """Membership of a value."""
        if value.level is None:
            return self.contains_infinity
        return value.level in self.finite_points or (self.ray_from is not None and value.level >= self.ray_from)

    def __str__(self) -> str:
        """Render as {1, 3.., inf}."""
        parts = [str(p) for p in self.finite_points]
        if self.ray_from is not None:
            parts.append(f"{self.ray_from}..")
        if self.contains_infinity:
            parts.append("inf")
        return "{" + ", ".join(parts) + "}"


@dataclass(frozen=True)
class Subset:
    """A subset of a carrier, as a predicate and, on finite carriers, its members.

    Attrs:
        predicate: membership test.
        members: explicit members when known.
        exact: false when membership comes out of a bounded search.
        name: label used to pick closed forms.
    """

    predicate: Callable[[Encoding], bool]
    members: Optional[FrozenSet[Encoding]] = None
    exact: bool = True
    name: Optional[str] = None

    def __contains__(self, x: Encoding) -> bool:
        """Membership of an encoding."""
        if self.members is not None:
            return x in self.members
        return self.predicate(x)


def explicit(members: Iterable[Encoding], name: Optional[str] = None) -> Subset:
    """A finite subset given by its members."""
    frozen = frozenset(members)
    return Subset(frozen.__contains__, frozen, True, name)


def whole(name: str = "all") -> Subset:
    """The whole carrier."""
    return Subset(lambda x: True, None, True, name)


@dataclass(frozen=True)
class ValuationPair:
    """(A_nu, P_nu) with the core ideal (nu^-1(inf) : M).

    Attrs:
        a_membership: A_nu = {a | nu(ax) >= nu(x) for all x}.
        p_membership: P_nu = {a | nu(ax) > nu(x) for all x off the core}.
        core: (nu^-1(inf) : M).
    """

    a_membership: Subset
    p_membership: Subset
    core: Subset


class ValuationSuite:
    """Every valuation check of one instance under one strategy, sharing one derived valuation."""

    def __init__(self, instance: "FilteredInstance", strategy: SearchStrategy = EXHAUSTIVE):
        self.instance = instance
        self.strategy = strategy
        self.space = SearchSpace(instance, strategy, "valuation")
        self.nu = DerivedValuation(instance, cap=strategy.level_bound)
        self.ring_pool = self.space.ring_elements(2)
        self.module_pool = self.space.module_elements(2)
        self._profile_ids: Dict[Tuple[ExtendedValue, ...], int] = {}
        self._profiles: List[Tuple[ExtendedValue, ...]] = []
        self._profile_taint: List[int] = []
        self._profile_of: Dict[Encoding, int] = {}
        self._orbits: Dict[Encoding, ValueSet] = {}

    def judgement(self, claim_id: str) -> Judgement:
        """A judgement watching this suite's valuation for capped infinities."""
        return Judgement(claim_id, self.strategy, self.nu)

    def fs(self, a: Encoding) -> str:
        """Canonical string of a ring encoding."""
        return self.instance.format_scalar(a)

    def fm(self, x: Encoding) -> str:
        """Canonical string of a module encoding."""
        return self.instance.format(x)

    @functools.cached_property
    def _value_table(self) -> Tuple[Tuple[ExtendedValue, ...], int]:
        values = tuple(self.nu.value(x) for x in self.module_pool)
        return values, sum(v.tainted for v in values)

    @property
    def values(self) -> Tuple[ExtendedValue, ...]:
        """nu over the module search space, in order.

        Every read counts the capped infinities of the table again.
        """
        values, tainted = self._value_table
        self.nu.reread(tainted)
        return values

    def profile_id(self, a: Encoding) -> int:
        """Interned id of the profile of a ring encoding."""
        pid = self._profile_of.get(a)
        if pid is None:
            act = self.instance.module.act
            profile = tuple(self.nu.value(act(a, x)) for x in self.module_pool)
            pid = self._profile_ids.get(profile)
            if pid is None:
                pid = self._profile_ids[profile] = len(self._profiles)
                self._profiles.append(profile)
                self._profile_taint.append(sum(v.tainted for v in profile))
            self._profile_of[a] = pid
        self.nu.reread(self._profile_taint[pid])
        return pid

    def image(self, a: Encoding) -> Tuple[ExtendedValue, ...]:
        """Profile of a ring encoding: nu(a*x) over the module search space."""
        return self._profiles[self.profile_id(a)]

    @functools.cached_property
    def ring_domain(self) -> Tuple[Encoding, ...]:
        """Least ring element of each profile, in element order."""
        seen = set()
        domain = []
        for a in self.ring_pool:
            pid = self.profile_id(a)
            if pid not in seen:
                seen.add(pid)
                domain.append(a)
        logger.debug("%s: %d ring profiles", self.instance.instance_id, len(domain))
        return tuple(domain)

    @functools.cached_property
    def _core_table(self) -> Tuple[Subset, int]:
        instance = self.instance
        if instance.finite:
            values = {x: self.nu.value(x) for x in instance.module.elements}
            members = (x for x, v in values.items() if v.is_infinite)
            return explicit(members, "core"), sum(v.tainted for v in values.values())
        if instance.stabilizes_to_zero:
            return explicit((instance.module.zero,), "core"), 0
        return Subset(lambda x: self.nu.value(x).is_infinite, None, False, "core"), 0

    @property
    def core(self) -> Subset:
        """nu^-1(inf): an explicit set on finite instances, {0} under stabilizes_to_zero."""
        core, tainted = self._core_table
        self.nu.reread(tainted)
        return core

    def colon(self, submodule: Subset) -> Subset:
        """(N : M) = {a | aM within N}."""
        instance = self.instance
        module, ring = instance.module, instance.ring
        name = f"({submodule.name}:M)"
        if instance.finite:
            members = (a for a in ring.elements if all(module.act(a, x) in submodule for x in module.elements))
            return dataclasses.replace(explicit(members, name), exact=submodule.exact)
        if submodule.name == "all":
            return whole(name)
        forms = instance.closed_forms
        if submodule.name == "core" and forms is not None and forms.colon_core is not None:
            return Subset(forms.colon_core, None, True, name)
        pool = self.module_pool
        return Subset(lambda a: all(module.act(a, x) in submodule for x in pool), None, False, name)

    def value_orbit(self, y: Encoding) -> ValueSet:
        """nu(Ry): exhaustive on finite instances, closed form or sampled otherwise."""
        orbit = self._orbits.get(y)
        if orbit is not None:
            self.nu.reread(int(orbit.tainted))
            return orbit
        instance = self.instance
        act = instance.module.act
        forms = instance.closed_forms
        if instance.finite:
            orbit = ValueSet.of(self.nu.value(act(a, y)) for a in instance.ring.elements)
        elif forms is not None and forms.value_orbit is not None:
            orbit = forms.value_orbit(self.nu.value(y))
        else:
            orbit = ValueSet.of((self.nu.value(act(a, y)) for a in self.ring_pool), exact=False)
        self._orbits[y] = orbit
        return orbit

    def axiom_i(self) -> CheckReport:
        """nu(x+y) >= min(nu(x), nu(y))."""
        judgement = self.judgement("def2.5.i")
        add, pool, values = self.instance.module.add, self.module_pool, self.values
        for (i, x), (j, y) in itertools.product(enumerate(pool), repeat=2):
            if self.nu.value(add(x, y)) < min(values[i], values[j]):
                return judgement.fail(x=self.fm(x), y=self.fm(y))
        return judgement.passed()

    def axiom_ii(self) -> CheckReport:
        """nu(x) <= nu(y) implies nu(ax) <= nu(ay), over (a, x, y)."""
        judgement = self.judgement("def2.5.ii")
        for a in self.ring_domain:
            hit = self._first_order_violation(self.image(a))
            if hit is not None:
                x, y = (self.module_pool[k] for k in hit)
                return judgement.fail(a=self.fs(a), x=self.fm(x), y=self.fm(y))
        return judgement.passed()

    def _first_order_violation(self, image: Tuple[ExtendedValue, ...]) -> Optional[Tuple[int, int]]:
        # suffix[v] is the least image over all y with nu(y) >= v.
        values = self.values
        lowest: Dict[ExtendedValue, ExtendedValue] = {}
        for v, w in zip(values, image):
            if v not in lowest or w < lowest[v]:
                lowest[v] = w
        suffix: Dict[ExtendedValue, ExtendedValue] = {}
        running: Optional[ExtendedValue] = None
        for v in sorted(lowest, reverse=True):
            if running is None or lowest[v] < running:
                running = lowest[v]
            suffix[v] = running
        for i, (v, w) in enumerate(zip(values, image)):
            if suffix[v] < w:
                for j, (u, t) in enumerate(zip(values, image)):
                    if v <= u and t < w:
                        return i, j
        return None

    def _transfer(
        self,
        claim_id: str,
        antecedent: Callable[[ExtendedValue, ExtendedValue], bool],
        consequent: Callable[[ExtendedValue, ExtendedValue], bool],
        z_off_core: bool,
        x_off_core: bool,
    ) -> CheckReport:
        """Quantify over (a, b, z, x): antecedent at some z forces consequent at every x."""
        judgement = self.judgement(claim_id)
        values, pool = self.values, self.module_pool
        z_range = [k for k, v in enumerate(values) if not (z_off_core and v.is_infinite)]
        x_range = [k for k, v in enumerate(values) if not (x_off_core and v.is_infinite)]
        for a, b in itertools.product(self.ring_domain, repeat=2):
            image_a, image_b = self.image(a), self.image(b)
            z = next((k for k in z_range if antecedent(image_a[k], image_b[k])), None)
            if z is None:
                continue
            x = next((k for k in x_range if not consequent(image_a[k], image_b[k])), None)
            if x is not None:
                return judgement.fail(a=self.fs(a), b=self.fs(b), z=self.fm(pool[z]), x=self.fm(pool[x]))
        return judgement.passed()

    def axiom_iii(self) -> CheckReport:
        """nu(az) <= nu(bz) for some z off the core implies nu(ax) <= nu(bx) for all x."""
        return self._transfer("def2.5.iii", lambda u, v: u <= v, lambda u, v: u <= v, True, False)

    def axiom_iv(self) -> CheckReport:
        """Every a outside (core : M) has an a' with nu(a'a x) = nu(x) for all x."""
        judgement = self.judgement("def2.5.iv")
        instance = self.instance
        ring = instance.ring
        core_colon = self.colon(self.core)
        unit = self.profile_id(ring.one)
        candidates = self._unit_candidates()
        for a in self.ring_pool:
            if a in core_colon:
                continue
            if any(self.profile_id(ring.multiply(b, a)) == unit for b in candidates):
                continue
            if instance.finite and core_colon.exact:
                return judgement.fail(a=self.fs(a))
            return judgement.inconclusive(NO_UNIT_FOUND.format(element=self.fs(a)))
        return judgement.passed()

    def _unit_candidates(self) -> Tuple[Encoding, ...]:
        instance = self.instance
        if instance.finite:
            return instance.ring.elements
        rng = self.strategy.rng("def2.5.iv")
        drawn = list(instance.unit_list)
        drawn.extend(instance.sample_ring(rng) for _ in range(math.isqrt(self.strategy.samples)))
        return tuple(dict.fromkeys(drawn))

    def onto(self) -> CheckReport:
        """The image of nu is not {inf}."""
        judgement = self.judgement("def2.5.onto")
        image = sorted(set(self.values))
        text = "{" + ", ".join(v.short for v in image) + "}"
        if all(v.is_infinite for v in image):
            return judgement.fail(DEGENERATE, image=text)
        return judgement.passed(IMAGE.format(image=text))

    def prop21_i(self) -> CheckReport:
        """nu(x) = nu(y) implies nu(ax) = nu(ay), over (a, x, y)."""
        judgement = self.judgement("prop2.1.i")
        values, pool = self.values, self.module_pool
        classes: Dict[ExtendedValue, List[int]] = {}
        for k, v in enumerate(values):
            classes.setdefault(v, []).append(k)
        for a in self.ring_domain:
            image = self.image(a)
            split = {v for v, members in classes.items() if len({image[k] for k in members}) > 1}
            for i, v in enumerate(values):
                if v not in split:
                    continue
                j = next(k for k in classes[v] if image[k] != image[i])
                return judgement.fail(a=self.fs(a), x=self.fm(pool[i]), y=self.fm(pool[j]))
        return judgement.passed()

    def prop21_ii(self) -> CheckReport:
        """nu(-x) = nu(x)."""
        judgement = self.judgement("prop2.1.ii")
        negate = self.instance.module.negate
        for x, v in zip(self.module_pool, self.values):
            if self.nu.value(negate(x)) != v:
                return judgement.fail(x=self.fm(x))
        return judgement.passed()

    def prop21_iii(self) -> CheckReport:
        """nu(x) != nu(y) implies nu(x+y) = min(nu(x), nu(y))."""
        judgement = self.judgement("prop2.1.iii")
        add, pool, values = self.instance.module.add, self.module_pool, self.values
        for (i, x), (j, y) in itertools.product(enumerate(pool), repeat=2):
            if values[i] != values[j] and self.nu.value(add(x, y)) != min(values[i], values[j]):
                return judgement.fail(x=self.fm(x), y=self.fm(y))
        return judgement.passed()

    def prop21_iv(self) -> CheckReport:
        """nu(az) = nu(bz) for some z off the core implies nu(ax) = nu(bx) for all x."""
        return self._transfer("prop2.1.iv", lambda u, v: u == v, lambda u, v: u == v, True, False)

    def prop21_v(self) -> CheckReport:
        """nu(az) < nu(bz) for some z implies nu(ax) < nu(bx) for all x off the core."""
        return self._transfer("prop2.1.v", lambda u, v: u < v, lambda u, v: u < v, False, True)

    def prime_submodule(self, submodule: Subset, claim_id: str = "prop2.1.vi") -> CheckReport:
        """N != M, and ax in N implies x in N or aM within N."""
        judgement = self.judgement(claim_id)
        act = self.instance.module.act
        if all(x in submodule for x in self.module_pool):
            return judgement.fail(precondition="N = M")
        submodule_colon = self.colon(submodule)
        for a in self.ring_pool:
            if a in submodule_colon:
                continue
            for x in self.module_pool:
                if x not in submodule and act(a, x) in submodule:
                    if not submodule_colon.exact:
                        return judgement.inconclusive(INEXACT_COLON)
                    return judgement.fail(a=self.fs(a), x=self.fm(x))
        return judgement.passed()

    def valuation_pair(self) -> Tuple[ValuationPair, CheckReport]:
        """Compute (A_nu, P_nu) and check the valuation pair conditions."""
        judgement = self.judgement("prop2.1.vii")
        instance = self.instance
        core_colon = self.colon(self.core)
        forms = instance.closed_forms
        if instance.finite:
            elements = instance.ring.elements
            pair = ValuationPair(
                explicit((a for a in elements if self._in_a(a)), "A"),
                explicit((a for a in elements if self._in_p(a)), "P"),
                core_colon,
            )
            return pair, self._check_pair(judgement, pair, ADOPTED_PAIR)
        if forms is None or forms.pair_a is None or forms.pair_p is None:
            raise CapabilityError(NO_CLOSED_FORM.format(operation="valuation_pair", instance=instance.instance_id))
        pair = ValuationPair(Subset(forms.pair_a, None, True, "A"), Subset(forms.pair_p, None, True, "P"), core_colon)
        samples = self.space.ring_elements()
        for a in samples:
            if forms.pair_a(a) != self._in_a(a) or forms.pair_p(a) != self._in_p(a):
                return pair, judgement.fail(law="closed form", a=self.fs(a))
        note = f"{ADOPTED_PAIR}; {CLOSED_FORM_AGREES.format(count=len(samples))}"
        return pair, self._check_pair(judgement, pair, note)

    def _in_a(self, a: Encoding) -> bool:
        return all(w >= v for v, w in zip(self.values, self.image(a)))

    def _in_p(self, a: Encoding) -> bool:
        return all(w > v for v, w in zip(self.values, self.image(a)) if not v.is_infinite)

    def _check_pair(self, judgement: Judgement, pair: ValuationPair, note: str) -> CheckReport:
        ring = self.instance.ring
        big, small = pair.a_membership, pair.p_membership
        in_a = [a for a in self.ring_pool if a in big]
        in_p = [a for a in self.ring_pool if a in small]
        fs = self.fs
        for a in in_p:
            if a not in big:
                return judgement.fail(law="P within A", a=fs(a))
        if ring.one not in big:
            return judgement.fail(law="one in A")
        for a, b in itertools.product(in_a, repeat=2):
            if ring.add(a, b) not in big:
                return judgement.fail(law="A closed under sum", a=fs(a), b=fs(b))
            if ring.multiply(a, b) not in big:
                return judgement.fail(law="A closed under product", a=fs(a), b=fs(b))
        for a in in_a:
            if ring.negate(a) not in big:
                return judgement.fail(law="A closed under negation", a=fs(a))
        if ring.zero not in small:
            return judgement.fail(law="zero in P")
        for a, b in itertools.product(in_p, repeat=2):
            if ring.add(a, b) not in small:
                return judgement.fail(law="P closed under sum", a=fs(a), b=fs(b))
        for a in in_p:
            if ring.negate(a) not in small:
                return judgement.fail(law="P closed under negation", a=fs(a))
        for a, b in itertools.product(in_a, in_p):
            if ring.multiply(a, b) not in small:
                return judgement.fail(law="P absorbs A", a=fs(a), b=fs(b))
        for a in self.ring_pool:
            if a in big:
                continue
            if any(ring.multiply(a, b) in big and ring.multiply(a, b) not in small for b in in_p):
                continue
            if not self.instance.finite:
                return judgement.inconclusive(NO_UNIT_FOUND.format(element=fs(a)))
            return judgement.fail(law="pair condition", a=fs(a))
        return judgement.passed(note)

    def lemma31(self) -> CheckReport:
        """Every finite value is the least level left, and the cache changes nothing."""
        judgement = self.judgement("lemma3.1")
        fresh = DerivedValuation(self.instance, self.nu.cap, cached=False)
        member = self.instance.module_filtration.level_member
        levels = self.space.levels()
        for x, v in zip(self.module_pool, self.values):
            if v.level is not None:
                leaves = [i for i in range(v.level + 1) if member(x, i) and not member(x, i + 1)]
                if leaves != [v.level]:
                    return judgement.fail(law="soundness", x=self.fm(x))
            elif v.exact and not all(member(x, n) for n in levels):
                return judgement.fail(law="soundness", x=self.fm(x))
            recomputed = fresh.value(x)
            if recomputed != v or recomputed.exact != v.exact:
                return judgement.fail(law="cache", x=self.fm(x))
        return judgement.passed()

    def strong_implies_trivial(self, lookup: Callable[[str], CheckReport]) -> CheckReport:
        """A strong filtration carrying a genuine valuation has R_n = R for every n >= 1."""
        judgement = self.judgement("prop3.1")
        early = _hypotheses(judgement, [lookup(claim) for claim in TRIVIALITY_HYPOTHESES])
        if early is not None:
            return early
        member = self.instance.ring_filtration.level_member
        for n in self.space.levels()[1:]:
            for r in self.ring_pool:
                if not member(r, n):
                    return judgement.fail(level=n, r=self.fs(r))
        return judgement.passed(FILTRATION_TRIVIAL)

    def axioms_imply_properties(self, lookup: Callable[[str], CheckReport]) -> CheckReport:
        """When axioms i-iv PASS, properties i-v must PASS as well."""
        judgement = self.judgement("cor3.1")
        early = _hypotheses(judgement, [lookup(claim) for claim in AXIOM_CLAIMS])
        if early is not None:
            return early
        for claim in DERIVED_CLAIMS:
            report = lookup(claim)
            if report.verdict == Verdict.FAIL:
                return judgement.fail(claim=claim, **(report.witness or {}))
            if report.verdict == Verdict.INCONCLUSIVE:
                return judgement.inconclusive(CONCLUSION_INCONCLUSIVE.format(claim=claim))
        return judgement.passed()


def _hypotheses(judgement: Judgement, reports: List[CheckReport]) -> Optional[CheckReport]:
    """Vacuous PASS on a refuted hypothesis, INCONCLUSIVE on an open one, None when all PASS."""
    refuted = next((r for r in reports if r.verdict == Verdict.FAIL), None)
    if refuted is not None:
        return judgement.passed(VACUOUS.format(claim=refuted.claim_id, verdict=refuted.verdict.value))
    pending = next((r for r in reports if r.verdict == Verdict.INCONCLUSIVE), None)
    if pending is not None:
        return judgement.inconclusive(HYPOTHESIS_INCONCLUSIVE.format(claim=pending.claim_id))
    return None


@functools.lru_cache(maxsize=32)
def valuation_suite(instance: "FilteredInstance", strategy: SearchStrategy = EXHAUSTIVE) -> ValuationSuite:
    """Shared suite of an instance and strategy."""
    return ValuationSuite(instance, strategy)


def nu(instance: "FilteredInstance", x: Element, cap: int = DEFAULT_LEVEL_BOUND) -> ExtendedValue:
    """nu(x) = min{i | x in M_i minus M_{i+1}}."""
    return DerivedValuation(instance, cap).nu(x)


def value_orbit(instance: "FilteredInstance", y: Element, strategy: SearchStrategy = EXHAUSTIVE) -> ValueSet:
    """nu(Ry) as a value set."""
    suite = valuation_suite(instance, strategy)
    return suite.value_orbit(suite.nu.check(y))


def check_axiom_i(instance: "FilteredInstance", strategy: SearchStrategy = EXHAUSTIVE) -> CheckReport:
    """Check def2.5.i."""
    return valuation_suite(instance, strategy).axiom_i()


def check_axiom_ii(instance: "FilteredInstance", strategy: SearchStrategy = EXHAUSTIVE) -> CheckReport:
    """Check def2.5.ii."""
    return valuation_suite(instance, strategy).axiom_ii()


def check_axiom_iii(instance: "FilteredInstance", strategy: SearchStrategy = EXHAUSTIVE) -> CheckReport:
    """Check def2.5.iii."""
    return valuation_suite(instance, strategy).axiom_iii()


def check_axiom_iv(instance: "FilteredInstance", strategy: SearchStrategy = EXHAUSTIVE) -> CheckReport:
    """Check def2.5.iv."""
    return valuation_suite(instance, strategy).axiom_iv()


def check_onto_nontrivial(instance: "FilteredInstance", strategy: SearchStrategy = EXHAUSTIVE) -> CheckReport:
    """Check def2.5.onto."""
    return valuation_suite(instance, strategy).onto()


def check_prop21(instance: "FilteredInstance", item: str, strategy: SearchStrategy = EXHAUSTIVE) -> CheckReport:
    """Check one item of the derived properties, i to vii."""
    suite = valuation_suite(instance, strategy)
    if item == "vi":
        return suite.prime_submodule(suite.core)
    if item == "vii":
        return suite.valuation_pair()[1]
    return getattr(suite, f"prop21_{item}")()


def core_submodule(instance: "FilteredInstance", strategy: SearchStrategy = EXHAUSTIVE) -> Subset:
    """nu^-1(inf)."""
    return valuation_suite(instance, strategy).core


def check_prime_submodule(
    instance: "FilteredInstance", submodule: Subset, strategy: SearchStrategy = EXHAUSTIVE
) -> CheckReport:
    """Check that a submodule is prime."""
    return valuation_suite(instance, strategy).prime_submodule(submodule)


def colon(instance: "FilteredInstance", submodule: Subset, strategy: SearchStrategy = EXHAUSTIVE) -> Subset:
    """(N : M)."""
    return valuation_suite(instance, strategy).colon(submodule)


def valuation_pair(
    instance: "FilteredInstance", strategy: SearchStrategy = EXHAUSTIVE
) -> Tuple[ValuationPair, CheckReport]:
    """The valuation pair and its report."""
    return valuation_suite(instance, strategy).valuation_pair()


def check_strong_implies_trivial(instance: "FilteredInstance", strategy: SearchStrategy = EXHAUSTIVE) -> CheckReport:
    """Check prop3.1 against the strongness and valuation verdicts of the same run."""
    from runner import ClaimRunner

    return ClaimRunner(instance, strategy).run("prop3.1")
