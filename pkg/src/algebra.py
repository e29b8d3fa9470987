# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Exact carriers for rings and modules, and the ordered value domain."""

import functools
import itertools
import logging
import math
import random
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import IntEnum
from typing import Hashable, Iterable, Iterator, NamedTuple, Optional, Tuple

from constants.errors import NEEDS_FINITE, UNPARSABLE
from exceptions import CapabilityError, ElementParseError

logger = logging.getLogger(__name__)

Encoding = Hashable


@dataclass(frozen=True)
class Element:
    """An element bound to one instance.

    Attrs:
        instance_id: id of the owning instance.
        encoding: canonical encoding inside the owning carrier.
    """

    instance_id: str
    encoding: Encoding


class Ordering(IntEnum):
    """Result of comparing two extended values."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class ExtendedValue:
    """A point of the natural numbers extended by infinity.

    Infinity carries an exactness flag: exact when proved, not exact when a
    membership scan gave up at its cap. Both infinities are the same point of
    the order.

    Attrs:
        level: the finite value, or None for infinity.
        exact: whether an infinite value was proved.
    """

    level: Optional[int]
    exact: bool = True

    @property
    def is_infinite(self) -> bool:
        """Report whether this is the infinite point."""
        return self.level is None

    @property
    def tainted(self) -> bool:
        """Report whether this value came out of a capped search."""
        return self.level is None and not self.exact

    def _key(self) -> Tuple[int, int]:
        return (1, 0) if self.level is None else (0, self.level)

    def __eq__(self, other: object) -> bool:
        """Compare as points of the order, ignoring exactness."""
        if not isinstance(other, ExtendedValue):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other: "ExtendedValue") -> bool:
        """Order finite values numerically, below infinity."""
        return self._key() < other._key()

    def __hash__(self) -> int:
        """Hash as a point of the order."""
        return hash(self._key())

    def __str__(self) -> str:
        """Render as the CLI prints values."""
        if self.level is not None:
            return str(self.level)
        return "inf(exact)" if self.exact else "inf(capped)"

    @property
    def short(self) -> str:
        """Render without the exactness qualifier."""
        return "inf" if self.level is None else str(self.level)


def finite(level: int) -> ExtendedValue:
    """Build a finite value."""
    return ExtendedValue(level)


def infinite(exact: bool = True) -> ExtendedValue:
    """Build the infinite value."""
    return ExtendedValue(None, exact)


INFINITY = infinite(True)


class Comparison(NamedTuple):
    """Ordering of two values and whether a capped infinity took part."""

    ordering: Ordering
    tainted: bool


def compare(v1: ExtendedValue, v2: ExtendedValue) -> Comparison:
    """Compare two extended values in the total order.

    Args:
        v1: left value.
        v2: right value.

    Returns:
        the ordering, with the taint flag raised if either side is a capped infinity.
    """
    if v1 < v2:
        ordering = Ordering.LESS
    elif v2 < v1:
        ordering = Ordering.GREATER
    else:
        ordering = Ordering.EQUAL
    return Comparison(ordering, v1.tainted or v2.tainted)


class Carrier(ABC):
    """Additive group of exact encodings."""

    name = "carrier"
    finite = True

    @property
    @abstractmethod
    def zero(self) -> Encoding:
        """Additive identity."""

    @abstractmethod
    def add(self, a: Encoding, b: Encoding) -> Encoding:
        """Sum of two encodings."""

    @abstractmethod
    def negate(self, a: Encoding) -> Encoding:
        """Additive inverse."""

    @abstractmethod
    def order_key(self, a: Encoding):
        """Sort key realising the element order."""

    @abstractmethod
    def format(self, a: Encoding) -> str:
        """Canonical string of an encoding."""

    @abstractmethod
    def parse(self, text: str) -> Encoding:
        """Encoding of a canonical string."""

    @abstractmethod
    def sample(self, rng: random.Random) -> Encoding:
        """Draw one encoding."""

    def _enumerate(self) -> Iterator[Encoding]:
        raise CapabilityError(NEEDS_FINITE.format(operation="enumeration", instance=self.name))

    def subtract(self, a: Encoding, b: Encoding) -> Encoding:
        """Difference of two encodings."""
        return self.add(a, self.negate(b))

    @functools.cached_property
    def elements(self) -> Tuple[Encoding, ...]:
        """Every encoding exactly once, in element order."""
        return tuple(self._enumerate())

    @property
    def size(self) -> int:
        """Number of elements of a finite carrier."""
        return len(self.elements)

    def probes(self, count: int) -> Tuple[Encoding, ...]:
        """The first elements in element order, used to seed searches."""
        return tuple(itertools.islice(self._enumerate(), count))

    def grow(self, group: frozenset, generator: Encoding) -> frozenset:
        """Subgroup generated by a finite subgroup H and one more encoding g.

        H + <g> is the union of the cosets H + k*g, stopping once k*g falls back into H.

        Raises:
            CapabilityError: on infinite carriers.
        """
        if not self.finite:
            raise CapabilityError(NEEDS_FINITE.format(operation="span", instance=self.name))
        if generator in group:
            return group
        grown = set(group)
        step = generator
        while step not in group:
            grown.update(self.add(h, step) for h in group)
            step = self.add(step, generator)
        return frozenset(grown)

    def span(self, generators: Iterable[Encoding]) -> frozenset:
        """Additive subgroup generated by finitely many encodings of a finite carrier."""
        group = frozenset((self.zero,))
        for generator in generators:
            group = self.grow(group, generator)
        return group

    def basis(self, elements: Iterable[Encoding]) -> Tuple[Tuple[Encoding, ...], frozenset]:
        """Greedy generating set of the subgroup spanned by elements, and that subgroup."""
        generators = []
        group = frozenset((self.zero,))
        for x in elements:
            if x not in group:
                generators.append(x)
                group = self.grow(group, x)
        return tuple(generators), group

    def span_contains(self, generators: Iterable[Encoding], x: Encoding) -> bool:
        """Report whether x lies in the subgroup generated by the generators."""
        return x in self.span(generators)


class RingCarrier(Carrier):
    """Commutative ring with identity."""

    @property
    @abstractmethod
    def one(self) -> Encoding:
        """Multiplicative identity."""

    @abstractmethod
    def multiply(self, a: Encoding, b: Encoding) -> Encoding:
        """Product of two encodings."""


class ModuleCarrier(Carrier):
    """Module over a ring carrier."""

    ring: RingCarrier

    @abstractmethod
    def act(self, r: Encoding, x: Encoding) -> Encoding:
        """Scalar action of a ring encoding on a module encoding."""


class ResidueRing(RingCarrier):
    """Integers modulo m, encoded as residues in [0, m)."""

    def __init__(self, modulus: int):
        self.modulus = modulus
        self.name = f"zmod({modulus})"

    @property
    def zero(self) -> int:
        """Residue 0."""
        return 0

    @property
    def one(self) -> int:
        """Residue 1 (0 in the zero ring)."""
        return 1 % self.modulus

    def add(self, a, b):
        """Sum modulo m."""
        return (a + b) % self.modulus

    def negate(self, a):
        """Negation modulo m."""
        return -a % self.modulus

    def multiply(self, a, b):
        """Product modulo m."""
        return a * b % self.modulus

    def order_key(self, a):
        """Numeric order."""
        return a

    def _enumerate(self):
        return iter(range(self.modulus))

    def sample(self, rng):
        """Uniform residue."""
        return rng.randrange(self.modulus)

    def format(self, a):
        """Decimal residue."""
        return str(a)

    def parse(self, text):
        """Decimal integer, reduced modulo m."""
        try:
            return int(text.strip()) % self.modulus
        except ValueError as exc:
            raise ElementParseError(UNPARSABLE.format(text=text, carrier=self.name)) from exc


class IntegerRing(RingCarrier):
    """The integers. Infinite, ordered by absolute value with positives first."""

    name = "int"
    finite = False

    def __init__(self, sample_bound: int = 10**6):
        self.sample_bound = sample_bound

    @property
    def zero(self) -> int:
        """Integer 0."""
        return 0

    @property
    def one(self) -> int:
        """Integer 1."""
        return 1

    def add(self, a, b):
        """Sum."""
        return a + b

    def negate(self, a):
        """Negation."""
        return -a

    def multiply(self, a, b):
        """Product."""
        return a * b

    def order_key(self, a):
        """Absolute value, positive before negative."""
        return (abs(a), a < 0)

    @functools.cached_property
    def elements(self):
        """The integers cannot be enumerated."""
        raise CapabilityError(NEEDS_FINITE.format(operation="enumeration", instance=self.name))

    def probes(self, count):
        """0, 1, -1, 2, -2, ... up to count values."""
        values = [0]
        k = 1
        while len(values) < count:
            values.extend((k, -k))
            k += 1
        return tuple(values[:count])

    def sample(self, rng):
        """Uniform integer in the sampling window."""
        return rng.randint(-self.sample_bound, self.sample_bound)

    def span(self, generators):
        """The integers have no finite subgroups to list."""
        raise CapabilityError(NEEDS_FINITE.format(operation="span", instance=self.name))

    def span_contains(self, generators, x):
        """x lies in the subgroup generated iff the gcd of the generators divides it."""
        g = 0
        for generator in generators:
            g = math.gcd(g, generator)
        return x == 0 if g == 0 else x % g == 0

    def format(self, a):
        """Decimal integer."""
        return str(a)

    def parse(self, text):
        """Decimal integer."""
        try:
            return int(text.strip())
        except ValueError as exc:
            raise ElementParseError(UNPARSABLE.format(text=text, carrier=self.name)) from exc


_TERM = re.compile(r"^(\d*)(x(?:\^(\d+))?)?$")


class TruncatedPolynomialRing(RingCarrier):
    """F_q[x]/(x^N), encoded as low-to-high coefficient tuples without trailing zeros.

    The element order is the base-q value of the coefficient tuple, which
    sorts by degree first and then by coefficients from the top down.
    """

    def __init__(self, q: int, truncation: int):
        self.q = q
        self.truncation = truncation
        self.name = f"poly({q},{truncation})"

    @staticmethod
    def _trim(coefficients) -> Tuple[int, ...]:
        coefficients = list(coefficients)
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        return tuple(coefficients)

    @property
    def zero(self):
        """The empty tuple."""
        return ()

    @property
    def one(self):
        """The constant 1."""
        return (1,) if self.truncation > 0 else ()

    def add(self, a, b):
        """Coefficientwise sum modulo q."""
        length = max(len(a), len(b))
        padded_a = a + (0,) * (length - len(a))
        padded_b = b + (0,) * (length - len(b))
        return self._trim((x + y) % self.q for x, y in zip(padded_a, padded_b))

    def negate(self, a):
        """Coefficientwise negation modulo q."""
        return tuple(-c % self.q for c in a)

    def multiply(self, a, b):
        """Convolution truncated below x^N."""
        product = [0] * self.truncation
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if i + j >= self.truncation:
                    break
                product[i + j] = (product[i + j] + x * y) % self.q
        return self._trim(product)

    def order_key(self, a):
        """Base-q value."""
        return sum(c * self.q**i for i, c in enumerate(a))

    def _from_value(self, value: int):
        coefficients = []
        while value:
            value, c = divmod(value, self.q)
            coefficients.append(c)
        return tuple(coefficients)

    def _enumerate(self):
        return (self._from_value(v) for v in range(self.q**self.truncation))

    def sample(self, rng):
        """Uniform polynomial."""
        return self._from_value(rng.randrange(self.q**self.truncation))

    def format(self, a):
        """Terms low to high, e.g. 3+x+2x^2; "0" for zero."""
        terms = []
        for i, c in enumerate(a):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            power = "x" if i == 1 else f"x^{i}"
            terms.append(power if c == 1 else f"{c}{power}")
        return "+".join(terms) if terms else "0"

    def parse(self, text):
        """Inverse of format; repeated powers accumulate."""
        coefficients = [0] * self.truncation
        for term in text.replace(" ", "").split("+"):
            match = _TERM.match(term)
            if not term or not match or not (match.group(1) or match.group(2)):
                raise ElementParseError(UNPARSABLE.format(text=text, carrier=self.name))
            c = int(match.group(1)) if match.group(1) else 1
            power = 0 if not match.group(2) else int(match.group(3) or 1)
            if power < self.truncation:
                coefficients[power] = (coefficients[power] + c) % self.q
        return self._trim(coefficients)


class RegularModule(ModuleCarrier):
    """A ring acting on itself by multiplication."""

    def __init__(self, ring: RingCarrier):
        self.ring = ring
        self.name = ring.name
        self.finite = ring.finite

    @property
    def zero(self):
        """Ring zero."""
        return self.ring.zero

    def add(self, a, b):
        """Ring sum."""
        return self.ring.add(a, b)

    def negate(self, a):
        """Ring negation."""
        return self.ring.negate(a)

    def act(self, r, x):
        """Ring product."""
        return self.ring.multiply(r, x)

    def order_key(self, a):
        """Ring element order."""
        return self.ring.order_key(a)

    @property
    def elements(self):
        """Ring elements."""
        return self.ring.elements

    def probes(self, count):
        """Ring probes."""
        return self.ring.probes(count)

    def sample(self, rng):
        """Ring sample."""
        return self.ring.sample(rng)

    def span(self, generators):
        """Ring span."""
        return self.ring.span(generators)

    def span_contains(self, generators, x):
        """Ring span membership."""
        return self.ring.span_contains(generators, x)

    def format(self, a):
        """Ring format."""
        return self.ring.format(a)

    def parse(self, text):
        """Ring parse."""
        return self.ring.parse(text)


class DirectSumModule(ModuleCarrier):
    """Direct sum of copies of a module, ordered lexicographically."""

    def __init__(self, base: ModuleCarrier, copies: int):
        self.base = base
        self.copies = copies
        self.ring = base.ring
        self.finite = base.finite
        self.name = f"{base.name}^{copies}"

    @property
    def zero(self):
        """Tuple of zeros."""
        return (self.base.zero,) * self.copies

    def add(self, a, b):
        """Componentwise sum."""
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def negate(self, a):
        """Componentwise negation."""
        return tuple(self.base.negate(x) for x in a)

    def act(self, r, x):
        """Diagonal action."""
        return tuple(self.base.act(r, c) for c in x)

    def order_key(self, a):
        """Lexicographic on component keys."""
        return tuple(self.base.order_key(c) for c in a)

    def _enumerate(self):
        return itertools.product(self.base.elements, repeat=self.copies)

    def probes(self, count):
        """Products of base probes, in order."""
        per_copy = max(1, math.ceil(count ** (1 / self.copies)))
        return tuple(itertools.islice(itertools.product(self.base.probes(per_copy), repeat=self.copies), count))

    def sample(self, rng):
        """Independent base samples."""
        return tuple(self.base.sample(rng) for _ in range(self.copies))

    def format(self, a):
        """Parenthesised, comma separated components."""
        return "(" + ",".join(self.base.format(c) for c in a) + ")"

    def parse(self, text):
        """Inverse of format."""
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ElementParseError(UNPARSABLE.format(text=text, carrier=self.name))
        parts = body[1:-1].split(",")
        if len(parts) != self.copies:
            raise ElementParseError(UNPARSABLE.format(text=text, carrier=self.name))
        return tuple(self.base.parse(part) for part in parts)
