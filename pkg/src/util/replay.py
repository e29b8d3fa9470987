# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Replays FAIL witnesses of a report with raw arithmetic and an uncached valuation."""

import logging
from typing import TYPE_CHECKING, Any, Callable, Dict, List, Optional

from algebra import Encoding, ExtendedValue
from exceptions import ValuationError
from structure import module_additive_laws, ring_laws, scalar_laws, vector_laws
from valuation import DerivedValuation

if TYPE_CHECKING:
    from instances import FilteredInstance

logger = logging.getLogger(__name__)


class WitnessReplay:
    """Confirms one instance's FAIL witnesses without going through any checker."""

    def __init__(self, instance: "FilteredInstance"):
        self.instance = instance
        self.ring = instance.ring
        self.module = instance.module
        self.valuation = DerivedValuation(instance, cached=False)

    def scalar(self, text: str) -> Encoding:
        """Ring encoding of a witness string."""
        return self.ring.parse(text)

    def element(self, text: str) -> Encoding:
        """Module encoding of a witness string."""
        return self.module.parse(text)

    def nu(self, x: Encoding) -> ExtendedValue:
        """Uncached value."""
        return self.valuation.value(x)

    def nu_a(self, a: Encoding, x: Encoding) -> ExtendedValue:
        """Uncached value of a*x."""
        return self.nu(self.module.act(a, x))

    def in_core_colon(self, a: Encoding) -> bool:
        """Whether aM lies in the core, over the whole finite module."""
        return all(self.nu_a(a, x).is_infinite for x in self.module.elements)

    def orbit_contains(self, value: ExtendedValue, y: Encoding) -> bool:
        """Whether some a*y has the given value, over the whole finite ring."""
        return any(self.nu_a(a, y) == value for a in self.ring.elements)

    def confirms(self, claim: str, witness: Dict[str, Any]) -> bool:
        """Whether the witness reproduces a violation of the claim."""
        prefix, _, item = claim.rpartition(".")
        if prefix in ("def2.1", "def2.3"):
            return self._filtration(prefix == "def2.1", item, witness)
        if claim == "cor3.1":
            inner = dict(witness)
            return self.confirms(inner.pop("claim"), inner)
        if claim in ("def2.2", "def2.4"):
            return self._strong(claim == "def2.2", witness)
        checks: Dict[str, Callable[[Dict[str, Any]], bool]] = {
            "structure": self._structure,
            "lemma3.1": self._soundness,
            "def2.5.i": self._sum_below_min,
            "def2.5.ii": self._order,
            "def2.5.iii": lambda w: self._transfer(w, lambda u, v: u <= v, True, False),
            "def2.5.iv": self._no_unit,
            "def2.5.onto": lambda w: all(self.nu(x).is_infinite for x in self.module.elements),
            "prop2.1.i": self._class_split,
            "prop2.1.ii": self._negation,
            "prop2.1.iii": self._strict_sum,
            "prop2.1.iv": lambda w: self._transfer(w, lambda u, v: u == v, True, False),
            "prop2.1.v": lambda w: self._transfer(w, lambda u, v: u < v, False, True),
            "prop2.1.vi": self._not_prime,
            "prop2.1.vii": self._pair,
            "prop3.1": lambda w: not self.instance.ring_filtration.level_member(self.scalar(w["r"]), w["level"]),
            "def2.6": self._relation,
            "def2.7": self._dependent,
            "prop3.3.i": self._dependent,
            "prop3.3.ii": self._matches,
            "prop3.4": self._vanishing,
        }
        return checks[claim](witness)

    def _filtration(self, ring_side: bool, item: str, w: Dict[str, Any]) -> bool:
        carrier = self.ring if ring_side else self.module
        member = (self.instance.ring_filtration if ring_side else self.instance.module_filtration).level_member
        if item == "i":
            return not member(carrier.parse(w["x"]), 0)
        if item == "ii":
            law, level = w.get("law"), w["level"]
            if law == "zero":
                return not member(carrier.zero, level)
            x = carrier.parse(w["x"])
            if law == "sum":
                y = carrier.parse(w["y"])
                return member(x, level) and member(y, level) and not member(carrier.add(x, y), level)
            if law == "negation":
                return member(x, level) and not member(carrier.negate(x), level)
            return member(x, level + 1) and not member(x, level)
        r = self.scalar(w["r"])
        x = carrier.parse(w["s"] if ring_side else w["x"])
        product = self.ring.multiply(r, x) if ring_side else self.module.act(r, x)
        n, m = w["n"], w["m"]
        return self.instance.ring_filtration.level_member(r, n) and member(x, m) and not member(product, n + m)

    def _strong(self, ring_side: bool, w: Dict[str, Any]) -> bool:
        carrier = self.ring if ring_side else self.module
        member = (self.instance.ring_filtration if ring_side else self.instance.module_filtration).level_member
        product = self.ring.multiply if ring_side else self.module.act
        n, m, x = w["n"], w["m"], carrier.parse(w["x"])
        scalars = [r for r in self.ring.elements if self.instance.ring_filtration.level_member(r, n)]
        own = [y for y in carrier.elements if member(y, m)]
        inside = carrier.span_contains([product(r, y) for r in scalars for y in own], x)
        if w["law"] == "inclusion":
            return inside and not member(x, n + m)
        return member(x, n + m) and not inside

    def _structure(self, w: Dict[str, Any]) -> bool:
        law = w["law"]
        groups = (
            (ring_laws(self.ring), ("a", "b", "c"), (self.scalar, self.scalar, self.scalar)),
            (module_additive_laws(self.module), ("x", "y", "z"), (self.element, self.element, self.element)),
            (scalar_laws(self.module), ("r", "s", "x"), (self.scalar, self.scalar, self.element)),
            (vector_laws(self.module), ("r", "x", "y"), (self.scalar, self.element, self.element)),
        )
        for laws, roles, parsers in groups:
            if law in laws and all(role in w for role in roles):
                return not laws[law](*(parse(w[role]) for role, parse in zip(roles, parsers)))
        return False

    def _soundness(self, w: Dict[str, Any]) -> bool:
        x = self.element(w["x"])
        value = self.nu(x)
        if value.level is None:
            return False
        member = self.instance.module_filtration.level_member
        return not (member(x, value.level) and not member(x, value.level + 1))

    def _sum_below_min(self, w: Dict[str, Any]) -> bool:
        x, y = self.element(w["x"]), self.element(w["y"])
        return self.nu(self.module.add(x, y)) < min(self.nu(x), self.nu(y))

    def _negation(self, w: Dict[str, Any]) -> bool:
        x = self.element(w["x"])
        return self.nu(self.module.negate(x)) != self.nu(x)

    def _order(self, w: Dict[str, Any]) -> bool:
        a, x, y = self.scalar(w["a"]), self.element(w["x"]), self.element(w["y"])
        return self.nu(x) <= self.nu(y) and not self.nu_a(a, x) <= self.nu_a(a, y)

    def _transfer(self, w: Dict[str, Any], relation, z_off_core: bool, x_off_core: bool) -> bool:
        a, b, z, x = self.scalar(w["a"]), self.scalar(w["b"]), self.element(w["z"]), self.element(w["x"])
        if z_off_core and self.nu(z).is_infinite:
            return False
        if x_off_core and self.nu(x).is_infinite:
            return False
        return relation(self.nu_a(a, z), self.nu_a(b, z)) and not relation(self.nu_a(a, x), self.nu_a(b, x))

    def _no_unit(self, w: Dict[str, Any]) -> bool:
        a = self.scalar(w["a"])
        if self.in_core_colon(a):
            return False
        return not any(
            all(self.nu_a(self.ring.multiply(b, a), x) == self.nu(x) for x in self.module.elements)
            for b in self.ring.elements
        )

    def _class_split(self, w: Dict[str, Any]) -> bool:
        a, x, y = self.scalar(w["a"]), self.element(w["x"]), self.element(w["y"])
        return self.nu(x) == self.nu(y) and self.nu_a(a, x) != self.nu_a(a, y)

    def _strict_sum(self, w: Dict[str, Any]) -> bool:
        x, y = self.element(w["x"]), self.element(w["y"])
        return self.nu(x) != self.nu(y) and self.nu(self.module.add(x, y)) != min(self.nu(x), self.nu(y))

    def _not_prime(self, w: Dict[str, Any]) -> bool:
        if "precondition" in w:
            return all(self.nu(x).is_infinite for x in self.module.elements)
        a, x = self.scalar(w["a"]), self.element(w["x"])
        return not self.nu(x).is_infinite and self.nu_a(a, x).is_infinite and not self.in_core_colon(a)

    def _in_a(self, a: Encoding) -> bool:
        return all(self.nu_a(a, x) >= self.nu(x) for x in self.module.elements)

    def _in_p(self, a: Encoding) -> bool:
        return all(self.nu_a(a, x) > self.nu(x) for x in self.module.elements if not self.nu(x).is_infinite)

    def _pair(self, w: Dict[str, Any]) -> bool:
        law, ring = w["law"], self.ring
        a = self.scalar(w["a"]) if "a" in w else None
        b = self.scalar(w["b"]) if "b" in w else None
        if law == "P within A":
            return self._in_p(a) and not self._in_a(a)
        if law == "one in A":
            return not self._in_a(ring.one)
        if law == "A closed under sum":
            return self._in_a(a) and self._in_a(b) and not self._in_a(ring.add(a, b))
        if law == "A closed under product":
            return self._in_a(a) and self._in_a(b) and not self._in_a(ring.multiply(a, b))
        if law == "A closed under negation":
            return self._in_a(a) and not self._in_a(ring.negate(a))
        if law == "zero in P":
            return not self._in_p(ring.zero)
        if law == "P closed under sum":
            return self._in_p(a) and self._in_p(b) and not self._in_p(ring.add(a, b))
        if law == "P closed under negation":
            return self._in_p(a) and not self._in_p(ring.negate(a))
        if law == "P absorbs A":
            return self._in_a(a) and self._in_p(b) and not self._in_p(ring.multiply(a, b))
        if law == "pair condition":
            units = [c for c in ring.elements if self._in_p(c)]
            return not self._in_a(a) and not any(
                self._in_a(ring.multiply(a, c)) and not self._in_p(ring.multiply(a, c)) for c in units
            )
        return False

    def _related(self, x: Encoding, y: Encoding) -> bool:
        return self.orbit_contains(self.nu(x), y) and self.orbit_contains(self.nu(y), x)

    def _relation(self, w: Dict[str, Any]) -> bool:
        law, x = w["law"], self.element(w["x"])
        if law == "reflexive":
            return not self._related(x, x)
        y = self.element(w["y"])
        if law == "symmetric":
            return self._related(x, y) != self._related(y, x)
        z = self.element(w["z"])
        return self._related(x, y) and self._related(y, z) and not self._related(x, z)

    def _dependent(self, w: Dict[str, Any]) -> bool:
        x = self.element(w["x"])
        if w.get("law") == "core":
            return self.nu(x).is_infinite
        return x != self.element(w["y"]) and self.orbit_contains(self.nu(x), self.element(w["y"]))

    def _matches(self, w: Dict[str, Any]) -> bool:
        x = self.element(w["x"])
        value = self.nu(x)
        return len(w["matches"]) != 1 and all(self.orbit_contains(value, self.element(r)) for r in w["matches"])

    def _vanishing(self, w: Dict[str, Any]) -> bool:
        total = self.module.zero
        coefficients = [self.scalar(a) for a in w["coefficients"]]
        for a, text in zip(coefficients, w["representatives"]):
            total = self.module.add(total, self.module.act(a, self.element(text)))
        return total == self.module.zero and not all(self.in_core_colon(a) for a in coefficients)


def replay_document(document: Dict[str, Any], instance: Optional["FilteredInstance"] = None) -> List[str]:
    """Discrepancies between a report's FAIL witnesses and direct re-evaluation.

    Args:
        document: report document.
        instance: instance to replay on; the catalog instance named by the report by default.

    Returns:
        one line per FAIL witness that could not be confirmed, empty when all replay.
    """
    if instance is None:
        from instances import get_instance

        instance = get_instance(document["instance_id"])
    replay = WitnessReplay(instance)
    discrepancies = []
    for result in document["results"]:
        if result["verdict"] != "FAIL":
            continue
        claim, witness = result["claim_id"], result.get("witness") or {}
        try:
            confirmed = replay.confirms(claim, witness)
        except (KeyError, ValuationError) as exc:
            logger.warning("%s: witness %s does not replay: %s", claim, witness, exc)
            confirmed = False
        if not confirmed:
            discrepancies.append(f"{instance.instance_id} {claim}: {witness}")
    return discrepancies
