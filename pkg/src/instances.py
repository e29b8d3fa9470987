# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Catalog of filtered rings and modules, and their constructors."""

import functools
import logging
import random
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, Mapping, Optional, Tuple, Union

import yaml

from algebra import (
    DirectSumModule,
    Element,
    Encoding,
    ExtendedValue,
    IntegerRing,
    ModuleCarrier,
    RegularModule,
    ResidueRing,
    RingCarrier,
    TruncatedPolynomialRing,
)
from constants.errors import (
    BAD_EXPONENT,
    MISSING_PARAMETER,
    NOT_PRIME,
    UNKNOWN_BASE,
    UNKNOWN_INSTANCE,
    UNKNOWN_KIND,
    WRONG_TYPE,
)
from exceptions import BadParameterError, ConfigError
from filtration import Filtration
from valuation import ValueSet

logger = logging.getLogger(__name__)

CATALOG_PATH = Path(__file__).resolve().parent.parent / "catalog.yaml"

Sampler = Callable[[random.Random], Encoding]


@dataclass(frozen=True)
class ClosedForms:
    """Formulas an infinite instance supplies in place of enumeration.

    Attrs:
        value_orbit: nu(Ry) from nu(y).
        pair_a: membership of A_nu.
        pair_p: membership of P_nu.
        colon_core: membership of (nu^-1(inf) : M).
    """

    value_orbit: Optional[Callable[[ExtendedValue], ValueSet]] = None
    pair_a: Optional[Callable[[Encoding], bool]] = None
    pair_p: Optional[Callable[[Encoding], bool]] = None
    colon_core: Optional[Callable[[Encoding], bool]] = None


@dataclass(frozen=True, eq=False)
class FilteredInstance:
    """A filtered ring, a filtered module over it and what is known about both.

    Attrs:
        instance_id: catalog id or constructor label.
        ring: ring carrier.
        module: module carrier over the ring.
        ring_filtration: levels R_n.
        module_filtration: levels M_n.
        stabilization_depth: level from which both filtrations are constant.
        stabilizes_to_zero: whether the module levels intersect in {0}.
        closed_forms: formulas for infinite carriers.
        unit_list: designated units tried first when searching for a'.
        ring_sampler: seeded ring sampler, defaults to the carrier's.
        module_sampler: seeded module sampler, defaults to the carrier's.
        description: one line for reports and listings.
    """

    instance_id: str
    ring: RingCarrier
    module: ModuleCarrier
    ring_filtration: Filtration
    module_filtration: Filtration
    stabilization_depth: Optional[int] = None
    stabilizes_to_zero: bool = False
    closed_forms: Optional[ClosedForms] = None
    unit_list: Tuple[Encoding, ...] = ()
    ring_sampler: Optional[Sampler] = field(default=None, repr=False)
    module_sampler: Optional[Sampler] = field(default=None, repr=False)
    description: str = ""

    @property
    def finite(self) -> bool:
        """Report whether both carriers can be enumerated."""
        return self.ring.finite and self.module.finite

    @property
    def carrier_sizes(self) -> Optional[Tuple[int, int]]:
        """(|R|, |M|) on finite instances."""
        if not self.finite:
            return None
        return self.ring.size, self.module.size

    def element(self, text: str) -> Element:
        """Module element from its canonical string."""
        return Element(self.instance_id, self.module.parse(text))

    def scalar(self, text: str) -> Element:
        """Ring element from its canonical string."""
        return Element(self.instance_id, self.ring.parse(text))

    def format(self, x: Encoding) -> str:
        """Canonical string of a module encoding."""
        return self.module.format(x)

    def format_scalar(self, a: Encoding) -> str:
        """Canonical string of a ring encoding."""
        return self.ring.format(a)

    def sample_ring(self, rng: random.Random) -> Encoding:
        """One seeded ring draw."""
        return (self.ring_sampler or self.ring.sample)(rng)

    def sample_module(self, rng: random.Random) -> Encoding:
        """One seeded module draw."""
        return (self.module_sampler or self.module.sample)(rng)


def is_prime(value: int) -> bool:
    """Trial division."""
    if value < 2:
        return False
    divisor = 2
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 1
    return True


def _require_prime(value: int) -> None:
    if not isinstance(value, int) or not is_prime(value):
        raise BadParameterError(NOT_PRIME.format(value=value))


def _require_at_least(name: str, value: int, minimum: int) -> None:
    if not isinstance(value, int) or value < minimum:
        raise BadParameterError(BAD_EXPONENT.format(name=name, minimum=minimum, value=value))


def _regular(
    instance_id: str,
    ring: RingCarrier,
    member: Callable[[Encoding, int], bool],
    depth: Optional[int],
    stabilizes: bool,
    description: str,
    **extra: Any,
) -> FilteredInstance:
    generators = extra.pop("generators", None)
    filtration = Filtration(member, depth, stabilizes, generators)
    return FilteredInstance(
        instance_id,
        ring,
        RegularModule(ring),
        filtration,
        filtration,
        stabilization_depth=depth,
        stabilizes_to_zero=stabilizes,
        description=description,
        **extra,
    )


def make_zmod_padic(p: int, k: int, instance_id: Optional[str] = None) -> FilteredInstance:
    """Z/p^k with levels (p^n), constant from level k.

    Raises:
        BadParameterError: when p is not prime or k < 1.
    """
    _require_prime(p)
    _require_at_least("k", k, 1)
    modulus = p**k

    def member(x: int, n: int) -> bool:
        return x % p ** min(n, k) == 0

    return _regular(
        instance_id or f"zmod_padic({p},{k})",
        ResidueRing(modulus),
        member,
        k,
        True,
        f"Z/{modulus} with {p}-adic levels",
        unit_list=(1,),
    )


def make_poly_truncated(q: int, truncation: int, instance_id: Optional[str] = None) -> FilteredInstance:
    """F_q[x]/(x^N) with levels (x^n), constant from level N.

    Raises:
        BadParameterError: when q is not prime or N < 1.
    """
    _require_prime(q)
    _require_at_least("N", truncation, 1)

    def member(a: Tuple[int, ...], n: int) -> bool:
        return not any(a[: min(n, truncation)])

    return _regular(
        instance_id or f"poly_truncated({q},{truncation})",
        TruncatedPolynomialRing(q, truncation),
        member,
        truncation,
        True,
        f"F_{q}[x]/(x^{truncation}) with x-adic levels",
        unit_list=((1,),),
    )


def make_int_padic(p: int, instance_id: Optional[str] = None) -> FilteredInstance:
    """Z with levels (p^n); infinite, with closed forms for orbits, the pair and the core colon.

    Raises:
        BadParameterError: when p is not prime.
    """
    _require_prime(p)

    def member(x: int, n: int) -> bool:
        return x % p**n == 0

    def sampler(rng: random.Random) -> int:
        # Mostly +-u*p^k with u prime to p, so that high levels get hit.
        if rng.randrange(16) == 0:
            return 0
        unit = rng.randrange(1, 1000)
        while unit % p == 0:
            unit = rng.randrange(1, 1000)
        return rng.choice((1, -1)) * unit * p ** rng.randrange(12)

    def orbit(v: ExtendedValue) -> ValueSet:
        if v.level is None:
            return ValueSet((), None, True, v.exact, v.tainted)
        return ValueSet((), v.level, True, True)

    forms = ClosedForms(
        value_orbit=orbit,
        pair_a=lambda a: True,
        pair_p=lambda a: a % p == 0,
        colon_core=lambda a: a == 0,
    )
    return _regular(
        instance_id or f"int_padic({p})",
        IntegerRing(),
        member,
        None,
        True,
        f"Z with {p}-adic levels",
        generators=lambda n: (p**n,),
        closed_forms=forms,
        unit_list=(1, -1),
        ring_sampler=sampler,
        module_sampler=sampler,
    )


def make_field_trivial_tail(q: int, instance_id: Optional[str] = None) -> FilteredInstance:
    """F_q with R_0 = F_q and R_n = {0} for n >= 1.

    Raises:
        BadParameterError: when q is not prime.
    """
    _require_prime(q)

    def member(x: int, n: int) -> bool:
        return n == 0 or x == 0

    return _regular(
        instance_id or f"field_trivial_tail({q})",
        ResidueRing(q),
        member,
        1,
        True,
        f"F_{q} with levels F_{q}, 0, 0, ...",
        unit_list=(1,),
    )


_BASE = re.compile(r"^zmod\((\d+)\)$")


def base_ring(base: str) -> RingCarrier:
    """Ring named by a base id: zmod(m) or int.

    Raises:
        BadParameterError: for any other id.
    """
    match = _BASE.match(base.strip())
    if match and int(match.group(1)) >= 1:
        return ResidueRing(int(match.group(1)))
    if base.strip() == "int":
        return IntegerRing()
    raise BadParameterError(UNKNOWN_BASE.format(base=base))


def make_trivial_strong(base: str, instance_id: Optional[str] = None) -> FilteredInstance:
    """R_n = R and M_n = M for every n: strong, with nu identically inf."""
    ring = base_ring(base)

    def member(x: Encoding, n: int) -> bool:
        return True

    return _regular(
        instance_id or f"trivial_strong({base})",
        ring,
        member,
        0,
        False,
        f"{ring.name} with every level equal to the ring",
        generators=(lambda n: (ring.one,)) if not ring.finite else None,
        unit_list=(ring.one,),
    )


def make_direct_sum(inst: FilteredInstance, copies: int = 2, instance_id: Optional[str] = None) -> FilteredInstance:
    """inst.M ** copies over the same ring, with componentwise levels.

    Raises:
        BadParameterError: when copies < 1.
    """
    _require_at_least("copies", copies, 1)
    module = DirectSumModule(inst.module, copies)
    base_member = inst.module_filtration.level_member

    def member(x: Tuple[Encoding, ...], n: int) -> bool:
        return all(base_member(c, n) for c in x)

    def sampler(rng: random.Random) -> Tuple[Encoding, ...]:
        return tuple(inst.sample_module(rng) for _ in range(copies))

    filtration = Filtration(member, inst.module_filtration.depth_hint, inst.stabilizes_to_zero)
    return FilteredInstance(
        instance_id or f"direct_sum({inst.instance_id},{copies})",
        inst.ring,
        module,
        inst.ring_filtration,
        filtration,
        stabilization_depth=inst.stabilization_depth,
        stabilizes_to_zero=inst.stabilizes_to_zero,
        unit_list=inst.unit_list,
        ring_sampler=inst.ring_sampler,
        module_sampler=sampler,
        description=f"({inst.description})^{copies}",
    )


InstanceRef = Union[str, Mapping[str, Any]]


def _typed(params: Mapping[str, Any], kind: str, name: str, expected: Any, description: str) -> Any:
    """A parameter checked against the type its constructor needs.

    Raises:
        ConfigError: naming instance.params.<name> when the type is wrong.
    """
    value = params[name]
    if not isinstance(value, expected):
        message = WRONG_TYPE.format(name=name, kind=kind, expected=description, value=value)
        raise ConfigError(message, f"instance.params.{name}")
    return value


def _inner_instance(inner: InstanceRef) -> FilteredInstance:
    if not isinstance(inner, str):
        kind, params = inner.get("kind"), inner.get("params", {})
        if not isinstance(kind, str):
            message = WRONG_TYPE.format(name="inst.kind", kind="direct_sum", expected="a string", value=kind)
            raise ConfigError(message, "instance.params.inst.kind")
        if not isinstance(params, Mapping):
            message = WRONG_TYPE.format(name="inst.params", kind="direct_sum", expected="a mapping", value=params)
            raise ConfigError(message, "instance.params.inst.params")
    try:
        return get_instance(inner) if isinstance(inner, str) else build_instance(kind, params)
    except ConfigError as exc:
        field = exc.field and exc.field.replace("instance", "instance.params.inst", 1)
        raise ConfigError(str(exc), field) from exc


def _direct_sum(params: Mapping[str, Any], instance_id: Optional[str]) -> FilteredInstance:
    inner = _typed(params, "direct_sum", "inst", (str, Mapping), "a catalog id or a constructor mapping")
    copies = _typed({"copies": 2, **params}, "direct_sum", "copies", int, "an integer")
    return make_direct_sum(_inner_instance(inner), copies, instance_id)


CONSTRUCTORS: Dict[str, Callable[[Mapping[str, Any], Optional[str]], FilteredInstance]] = {
    "zmod_padic": lambda params, iid: make_zmod_padic(params["p"], params["k"], iid),
    "poly_truncated": lambda params, iid: make_poly_truncated(params["q"], params["N"], iid),
    "int_padic": lambda params, iid: make_int_padic(params["p"], iid),
    "field_trivial_tail": lambda params, iid: make_field_trivial_tail(params["q"], iid),
    "trivial_strong": lambda params, iid: make_trivial_strong(
        _typed(params, "trivial_strong", "base", str, "a ring id such as zmod(4) or int"), iid
    ),
    "direct_sum": _direct_sum,
}


def build_instance(kind: str, params: Mapping[str, Any], instance_id: Optional[str] = None) -> FilteredInstance:
    """Instance from a constructor kind and its parameters.

    Raises:
        ConfigError: for an unknown kind or a missing parameter.
        BadParameterError: for parameters outside the constructor's domain.
    """
    constructor = CONSTRUCTORS.get(kind)
    if constructor is None:
        raise ConfigError(UNKNOWN_KIND.format(kind=kind), "instance.kind")
    try:
        instance = constructor(params, instance_id)
    except KeyError as exc:
        missing = exc.args[0]
        raise ConfigError(MISSING_PARAMETER.format(name=missing, kind=kind), f"instance.params.{missing}") from exc
    logger.debug("built %s: %s", instance.instance_id, instance.description)
    return instance


@functools.lru_cache(maxsize=1)
def load_catalog(path: Path = CATALOG_PATH) -> Dict[str, Dict[str, Any]]:
    """Catalog entries by id."""
    with open(path, encoding="utf-8") as catalog:
        return yaml.safe_load(catalog)


@functools.lru_cache(maxsize=None)
def get_instance(instance_id: str) -> FilteredInstance:
    """Catalog instance by frozen id.

    Raises:
        ConfigError: for an id not in the catalog.
    """
    entry = load_catalog().get(instance_id)
    if entry is None:
        raise ConfigError(UNKNOWN_INSTANCE.format(instance=instance_id), "instance")
    return build_instance(entry["kind"], entry.get("params", {}), instance_id)


def catalog_ids() -> Tuple[str, ...]:
    """Frozen catalog ids."""
    return tuple(load_catalog())
