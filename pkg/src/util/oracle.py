# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Brute-force claim evaluation on finite instances, straight from the definitions.

No derived-valuation cache, no closed forms and no profile compression: every
quantifier runs over the whole carrier in element order, so the first
violation found is the one the checkers must report. Meant for small
carriers; it is what golden reports are pinned against.
"""

import itertools
import logging
from typing import TYPE_CHECKING, Any, Callable, Dict, Iterable, List, NamedTuple, Optional, Tuple

from algebra import INFINITY, Encoding, ExtendedValue, finite
from capability import requires_finite
from constants.claims import AXIOM_CLAIMS, CLAIMS, DERIVED_CLAIMS, TRIVIALITY_HYPOTHESES
from constants.defaults import DEFAULT_N_MAX, LEVEL_MARGIN
from constants.errors import UNKNOWN_CLAIM
from exceptions import ConfigError

if TYPE_CHECKING:
    from instances import FilteredInstance

logger = logging.getLogger(__name__)

# The structure laws and the cache soundness check have no separate definition to evaluate.
ORACLE_CLAIMS = tuple(claim for claim in CLAIMS if claim not in ("structure", "lemma3.1"))


class OracleResult(NamedTuple):
    """Verdict and witness of one claim, without notes."""

    verdict: str
    witness: Optional[Dict[str, Any]] = None


PASS = OracleResult("PASS")


def _fail(**witness) -> OracleResult:
    return OracleResult("FAIL", witness)


class Oracle:
    """Direct evaluation of every claim in ORACLE_CLAIMS on one finite instance."""

    def __init__(self, instance: "FilteredInstance", n_max: int = DEFAULT_N_MAX):
        self.instance = instance
        self.n_max = n_max
        self.ring = instance.ring
        self.module = instance.module
        self.levels = range((instance.stabilization_depth or 0) + LEVEL_MARGIN + 1)
        self._results: Dict[str, OracleResult] = {}
        self._values: Optional[Dict[Encoding, ExtendedValue]] = None

    def nu(self, x: Encoding) -> ExtendedValue:
        """min{i | x in M_i minus M_{i+1}} over the scanned levels, inf when there is none."""
        member = self.instance.module_filtration.level_member
        for i in self.levels:
            if member(x, i) and not member(x, i + 1):
                return finite(i)
        return INFINITY

    @requires_finite
    def value_table(self) -> Dict[Encoding, ExtendedValue]:
        """nu of every module element."""
        if self._values is None:
            self._values = {x: self.nu(x) for x in self.module.elements}
        return self._values

    def _v(self, x: Encoding) -> ExtendedValue:
        return self.value_table()[x]

    def orbit(self, y: Encoding) -> List[ExtendedValue]:
        """nu(ay) for every ring element a."""
        return [self._v(self.module.act(a, y)) for a in self.ring.elements]

    def core(self) -> List[Encoding]:
        """Module elements of infinite value."""
        return [x for x in self.module.elements if self._v(x).is_infinite]

    def colon(self, submodule: Iterable[Encoding]) -> List[Encoding]:
        """Ring elements a with aM inside the submodule."""
        members = set(submodule)
        return [a for a in self.ring.elements if all(self.module.act(a, x) in members for x in self.module.elements)]

    def off_core(self) -> List[Encoding]:
        """Module elements of finite value, in element order."""
        return [x for x in self.module.elements if not self._v(x).is_infinite]

    def related(self, x: Encoding, y: Encoding) -> bool:
        """nu(x) in nu(Ry) and nu(y) in nu(Rx)."""
        return self._v(x) in self.orbit(y) and self._v(y) in self.orbit(x)

    def skeleton(self) -> Tuple[Encoding, ...]:
        """First element of each connected class off the core."""
        elements = self.off_core()
        representatives: List[Encoding] = []
        assigned = set()
        for x in elements:
            if x in assigned:
                continue
            representatives.append(x)
            assigned.add(x)
            frontier = [x]
            while frontier:
                y = frontier.pop()
                for z in elements:
                    if z not in assigned and self.related(y, z):
                        assigned.add(z)
                        frontier.append(z)
        return tuple(representatives)

    @requires_finite
    def evaluate(self, claim: str) -> OracleResult:
        """Result of one claim, computed once.

        Raises:
            ConfigError: for a claim the oracle does not evaluate.
            CapabilityError: on infinite instances.
        """
        if claim not in ORACLE_CLAIMS:
            raise ConfigError(UNKNOWN_CLAIM.format(claim=claim), "checks")
        if claim not in self._results:
            self._results[claim] = self._dispatch(claim)()
            logger.debug("oracle %s on %s: %s", claim, self.instance.instance_id, self._results[claim].verdict)
        return self._results[claim]

    def run(self, claims: Iterable[str] = ORACLE_CLAIMS) -> Dict[str, OracleResult]:
        """Results of several claims, by claim id."""
        return {claim: self.evaluate(claim) for claim in claims}

    def _dispatch(self, claim: str) -> Callable[[], OracleResult]:
        prefix, _, item = claim.rpartition(".")
        if prefix in ("def2.1", "def2.3"):
            return lambda: self._filtration_item("ring" if prefix == "def2.1" else "module", item)
        handlers: Dict[str, Callable[[], OracleResult]] = {
            "def2.2": lambda: self._strong("ring"),
            "def2.4": lambda: self._strong("module"),
            "def2.5.i": self._axiom_i,
            "def2.5.ii": self._axiom_ii,
            "def2.5.iii": lambda: self._transfer(lambda u, v: u <= v, lambda u, v: u <= v, True, False),
            "def2.5.iv": self._axiom_iv,
            "def2.5.onto": self._onto,
            "prop2.1.i": self._class_preservation,
            "prop2.1.ii": self._negation,
            "prop2.1.iii": self._strict_sum,
            "prop2.1.iv": lambda: self._transfer(lambda u, v: u == v, lambda u, v: u == v, True, False),
            "prop2.1.v": lambda: self._transfer(lambda u, v: u < v, lambda u, v: u < v, False, True),
            "prop2.1.vi": self._prime_core,
            "prop2.1.vii": self._pair,
            "cor3.1": self._axioms_imply_properties,
            "prop3.1": self._strong_implies_trivial,
            "def2.6": self._relation,
            "def2.7": self._independent,
            "prop3.3.i": self._independent,
            "prop3.3.ii": self._unique_match,
            "prop3.4": self._vanishing_combinations,
        }
        return handlers[claim]

    def _side(self, side: str):
        if side == "ring":
            return self.ring, self.instance.ring_filtration.level_member, self.ring.multiply, ("r", "s")
        return self.module, self.instance.module_filtration.level_member, self.module.act, ("r", "x")

    def _filtration_item(self, side: str, item: str) -> OracleResult:
        carrier, member, product, (left, right) = self._side(side)
        ring_member = self.instance.ring_filtration.level_member
        fmt = carrier.format
        if item == "i":
            for x in carrier.elements:
                if not member(x, 0):
                    return _fail(x=fmt(x))
            return PASS
        if item == "ii":
            for x in carrier.elements:
                for n in self.levels[:-1]:
                    if member(x, n + 1) and not member(x, n):
                        return _fail(x=fmt(x), level=n)
            for n in self.levels:
                if not member(carrier.zero, n):
                    return _fail(law="zero", level=n)
                members = [x for x in carrier.elements if member(x, n)]
                for x, y in itertools.product(members, repeat=2):
                    if not member(carrier.add(x, y), n):
                        return _fail(law="sum", level=n, x=fmt(x), y=fmt(y))
                for x in members:
                    if not member(carrier.negate(x), n):
                        return _fail(law="negation", level=n, x=fmt(x))
            return PASS
        for r, x in itertools.product(self.ring.elements, carrier.elements):
            for n in self.levels:
                if not ring_member(r, n):
                    continue
                for m in self.levels:
                    if member(x, m) and not member(product(r, x), n + m):
                        return _fail(**{left: self.ring.format(r), right: fmt(x), "n": n, "m": m})
        return PASS

    def _strong(self, side: str) -> OracleResult:
        carrier, member, product, _ = self._side(side)
        ring_member = self.instance.ring_filtration.level_member
        for n, m in itertools.product(self.levels, repeat=2):
            scalars = [r for r in self.ring.elements if ring_member(r, n)]
            own = [x for x in carrier.elements if member(x, m)]
            generated = carrier.span(product(r, x) for r in scalars for x in own)
            target = {x for x in carrier.elements if member(x, n + m)}
            extra = [x for x in carrier.elements if x in generated and x not in target]
            if extra:
                return _fail(n=n, m=m, x=carrier.format(extra[0]), law="inclusion")
            missing = [x for x in carrier.elements if x in target and x not in generated]
            if missing:
                return _fail(n=n, m=m, x=carrier.format(missing[0]), law="generation")
        return PASS

    def _axiom_i(self) -> OracleResult:
        fm = self.module.format
        for x, y in itertools.product(self.module.elements, repeat=2):
            if self._v(self.module.add(x, y)) < min(self._v(x), self._v(y)):
                return _fail(x=fm(x), y=fm(y))
        return PASS

    def _axiom_ii(self) -> OracleResult:
        act, fm = self.module.act, self.module.format
        for a in self.ring.elements:
            for x, y in itertools.product(self.module.elements, repeat=2):
                if self._v(x) <= self._v(y) and not self._v(act(a, x)) <= self._v(act(a, y)):
                    return _fail(a=self.ring.format(a), x=fm(x), y=fm(y))
        return PASS

    def _transfer(self, antecedent, consequent, z_off_core: bool, x_off_core: bool) -> OracleResult:
        act, fm, fs = self.module.act, self.module.format, self.ring.format
        z_range = [z for z in self.module.elements if not (z_off_core and self._v(z).is_infinite)]
        x_range = [x for x in self.module.elements if not (x_off_core and self._v(x).is_infinite)]
        for a, b in itertools.product(self.ring.elements, repeat=2):
            z = next((z for z in z_range if antecedent(self._v(act(a, z)), self._v(act(b, z)))), None)
            if z is None:
                continue
            for x in x_range:
                if not consequent(self._v(act(a, x)), self._v(act(b, x))):
                    return _fail(a=fs(a), b=fs(b), z=fm(z), x=fm(x))
        return PASS

    def _axiom_iv(self) -> OracleResult:
        act, multiply = self.module.act, self.ring.multiply
        core_colon = self.colon(self.core())
        for a in self.ring.elements:
            if a in core_colon:
                continue
            if any(
                all(self._v(act(multiply(b, a), x)) == self._v(x) for x in self.module.elements)
                for b in self.ring.elements
            ):
                continue
            return _fail(a=self.ring.format(a))
        return PASS

    def _onto(self) -> OracleResult:
        image = sorted(set(self.value_table().values()))
        if all(v.is_infinite for v in image):
            return _fail(image="{" + ", ".join(v.short for v in image) + "}")
        return PASS

    def _class_preservation(self) -> OracleResult:
        act, fm = self.module.act, self.module.format
        for a in self.ring.elements:
            for x, y in itertools.product(self.module.elements, repeat=2):
                if self._v(x) == self._v(y) and self._v(act(a, x)) != self._v(act(a, y)):
                    return _fail(a=self.ring.format(a), x=fm(x), y=fm(y))
        return PASS

    def _negation(self) -> OracleResult:
        for x in self.module.elements:
            if self._v(self.module.negate(x)) != self._v(x):
                return _fail(x=self.module.format(x))
        return PASS

    def _strict_sum(self) -> OracleResult:
        fm = self.module.format
        for x, y in itertools.product(self.module.elements, repeat=2):
            if self._v(x) != self._v(y) and self._v(self.module.add(x, y)) != min(self._v(x), self._v(y)):
                return _fail(x=fm(x), y=fm(y))
        return PASS

    def _prime_core(self) -> OracleResult:
        core = set(self.core())
        if all(x in core for x in self.module.elements):
            return _fail(precondition="N = M")
        core_colon = self.colon(core)
        for a in self.ring.elements:
            if a in core_colon:
                continue
            for x in self.module.elements:
                if x not in core and self.module.act(a, x) in core:
                    return _fail(a=self.ring.format(a), x=self.module.format(x))
        return PASS

    def pair(self) -> Tuple[List[Encoding], List[Encoding]]:
        """A_nu and P_nu, P_nu with the strict inequality off the core."""
        act = self.module.act
        big = [a for a in self.ring.elements if all(self._v(act(a, x)) >= self._v(x) for x in self.module.elements)]
        small = [a for a in self.ring.elements if all(self._v(act(a, x)) > self._v(x) for x in self.off_core())]
        return big, small

    def _pair(self) -> OracleResult:
        ring, fs = self.ring, self.ring.format
        big, small = self.pair()
        for a in small:
            if a not in big:
                return _fail(law="P within A", a=fs(a))
        if ring.one not in big:
            return _fail(law="one in A")
        for a, b in itertools.product(big, repeat=2):
            if ring.add(a, b) not in big:
                return _fail(law="A closed under sum", a=fs(a), b=fs(b))
            if ring.multiply(a, b) not in big:
                return _fail(law="A closed under product", a=fs(a), b=fs(b))
        for a in big:
            if ring.negate(a) not in big:
                return _fail(law="A closed under negation", a=fs(a))
        if ring.zero not in small:
            return _fail(law="zero in P")
        for a, b in itertools.product(small, repeat=2):
            if ring.add(a, b) not in small:
                return _fail(law="P closed under sum", a=fs(a), b=fs(b))
        for a in small:
            if ring.negate(a) not in small:
                return _fail(law="P closed under negation", a=fs(a))
        for a, b in itertools.product(big, small):
            if ring.multiply(a, b) not in small:
                return _fail(law="P absorbs A", a=fs(a), b=fs(b))
        for a in ring.elements:
            if a in big:
                continue
            if not any(ring.multiply(a, b) in big and ring.multiply(a, b) not in small for b in small):
                return _fail(law="pair condition", a=fs(a))
        return PASS

    def _axioms_imply_properties(self) -> OracleResult:
        if any(self.evaluate(claim).verdict == "FAIL" for claim in AXIOM_CLAIMS):
            return PASS
        for claim in DERIVED_CLAIMS:
            result = self.evaluate(claim)
            if result.verdict == "FAIL":
                return _fail(claim=claim, **(result.witness or {}))
        return PASS

    def _strong_implies_trivial(self) -> OracleResult:
        if any(self.evaluate(claim).verdict == "FAIL" for claim in TRIVIALITY_HYPOTHESES):
            return PASS
        member = self.instance.ring_filtration.level_member
        for n in self.levels[1:]:
            for r in self.ring.elements:
                if not member(r, n):
                    return _fail(level=n, r=self.ring.format(r))
        return PASS

    def _relation(self) -> OracleResult:
        elements, fm = self.off_core(), self.module.format
        for x in elements:
            if not self.related(x, x):
                return _fail(law="reflexive", x=fm(x))
        for x, y in itertools.product(elements, repeat=2):
            if self.related(x, y) != self.related(y, x):
                return _fail(law="symmetric", x=fm(x), y=fm(y))
        for x, y, z in itertools.product(elements, repeat=3):
            if self.related(x, y) and self.related(y, z) and not self.related(x, z):
                return _fail(law="transitive", x=fm(x), y=fm(y), z=fm(z))
        return PASS

    def _independent(self) -> OracleResult:
        representatives, fm = self.skeleton(), self.module.format
        for x in representatives:
            if self._v(x).is_infinite:
                return _fail(law="core", x=fm(x))
        for x, y in itertools.permutations(representatives, 2):
            if self._v(x) in self.orbit(y):
                return _fail(x=fm(x), y=fm(y))
        return PASS

    def _unique_match(self) -> OracleResult:
        representatives, fm = self.skeleton(), self.module.format
        for x in self.off_core():
            matches = [fm(r) for r in representatives if self._v(x) in self.orbit(r)]
            if len(matches) != 1:
                return _fail(x=fm(x), matches=matches)
        return PASS

    def _vanishing_combinations(self) -> OracleResult:
        module = self.module
        core_colon = self.colon(self.core())
        representatives = self.skeleton()
        for size in range(1, self.n_max + 1):
            for chosen in itertools.combinations(representatives, size):
                for coefficients in itertools.product(self.ring.elements, repeat=size):
                    total = module.zero
                    for a, r in zip(coefficients, chosen):
                        total = module.add(total, module.act(a, r))
                    if total == module.zero and not all(a in core_colon for a in coefficients):
                        return _fail(
                            representatives=[module.format(r) for r in chosen],
                            coefficients=[self.ring.format(a) for a in coefficients],
                        )
        return PASS
