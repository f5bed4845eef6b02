"""Finite Boolean algebras, their ultrafilters and principal ideals.

Elements are bitsets over a fixed tuple of named atoms. Everything here is
exact and small; the algebra with n atoms has 2**n elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import UsageError


@dataclass(frozen=True)
class Algebra:
    """The Boolean algebra of all subsets of a finite set of atoms."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise UsageError("atom names must be distinct")
        if not self.names:
            raise UsageError("an algebra needs at least one atom")

    @property
    def atom_count(self) -> int:
        return len(self.names)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.names)) - 1

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UsageError(f"unknown atom {name!r}") from None

    @property
    def top(self) -> "AtomSet":
        return AtomSet(self, self.full_mask)

    @property
    def bottom(self) -> "AtomSet":
        return AtomSet(self, 0)

    def atom(self, i: int) -> "AtomSet":
        return AtomSet(self, 1 << i)

    def from_bits(self, bits: int) -> "AtomSet":
        if bits & ~self.full_mask:
            raise UsageError("bitset has atoms outside the algebra")
        return AtomSet(self, bits)

    def from_indices(self, indices: Iterable[int]) -> "AtomSet":
        bits = 0
        for i in indices:
            bits |= 1 << i
        return self.from_bits(bits)

    def from_names(self, names: Iterable[str]) -> "AtomSet":
        return self.from_indices(self.index(n) for n in names)

    def elements(self) -> Iterator["AtomSet"]:
        for bits in range(1 << len(self.names)):
            yield AtomSet(self, bits)

    def nonempty_elements(self) -> Iterator["AtomSet"]:
        for bits in range(1, 1 << len(self.names)):
            yield AtomSet(self, bits)

    def ultrafilters(self) -> list["Ultrafilter"]:
        return [Ultrafilter(self, i) for i in range(len(self.names))]


@dataclass(frozen=True)
class AtomSet:
    """An element of a finite Boolean algebra."""

    algebra: Algebra
    bits: int

    def _check(self, other: "AtomSet") -> None:
        if not isinstance(other, AtomSet):
            raise UsageError("expected an algebra element")
        if other.algebra != self.algebra:
            raise UsageError("elements belong to different algebras")

    def __and__(self, other: "AtomSet") -> "AtomSet":
        self._check(other)
        return AtomSet(self.algebra, self.bits & other.bits)

    def __or__(self, other: "AtomSet") -> "AtomSet":
        self._check(other)
        return AtomSet(self.algebra, self.bits | other.bits)

    def __sub__(self, other: "AtomSet") -> "AtomSet":
        self._check(other)
        return AtomSet(self.algebra, self.bits & ~other.bits)

    def __le__(self, other: "AtomSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __ge__(self, other: "AtomSet") -> bool:
        return other <= self

    def __lt__(self, other: "AtomSet") -> bool:
        return self <= other and self.bits != other.bits

    def __bool__(self) -> bool:
        return self.bits != 0

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __iter__(self) -> Iterator[int]:
        """Indices of the atoms below this element, in increasing order."""
        bits, i = self.bits, 0
        while bits:
            if bits & 1:
                yield i
            bits >>= 1
            i += 1

    def __contains__(self, atom: int) -> bool:
        return bool(self.bits >> atom & 1)

    def complement(self) -> "AtomSet":
        return AtomSet(self.algebra, self.algebra.full_mask & ~self.bits)

    def is_atom(self) -> bool:
        return len(self) == 1

    def names(self) -> tuple[str, ...]:
        return tuple(self.algebra.names[i] for i in self)

    def __repr__(self) -> str:
        return "{" + ",".join(self.names()) + "}"


def meet(x: AtomSet, y: AtomSet) -> AtomSet:
    return x & y


def join(x: AtomSet, y: AtomSet) -> AtomSet:
    return x | y


def relcomp(y: AtomSet, x: AtomSet) -> AtomSet:
    """y \\ x"""
    return y - x


def leq(x: AtomSet, y: AtomSet) -> bool:
    return x <= y


@dataclass(frozen=True)
class Ultrafilter:
    """The ultrafilter of all elements containing a fixed atom."""

    algebra: Algebra
    atom: int

    def __contains__(self, element: AtomSet) -> bool:
        if element.algebra != self.algebra:
            raise UsageError("element belongs to a different algebra")
        return self.atom in element

    def members(self) -> frozenset[AtomSet]:
        return frozenset(e for e in self.algebra.elements() if self.atom in e)

    def __repr__(self) -> str:
        return f"ξ[{self.algebra.names[self.atom]}]"


@dataclass(frozen=True)
class Ideal:
    """A principal ideal, the down-set of its generator."""

    generator: AtomSet

    def __contains__(self, element: AtomSet) -> bool:
        return element <= self.generator

    def members(self) -> frozenset[AtomSet]:
        g = self.generator
        return frozenset(e for e in g.algebra.elements() if e <= g)

    def ultrafilters(self) -> list[Ultrafilter]:
        """Ultrafilters of the ideal, one per atom below the generator."""
        return [Ultrafilter(self.generator.algebra, i) for i in self.generator]


def zero_set(element: AtomSet) -> frozenset[int]:
    """The atoms whose ultrafilter does not contain the element."""
    return frozenset(element.complement())


def up_set(family: Iterable[AtomSet], universe: Iterable[AtomSet]) -> frozenset[AtomSet]:
    """Members of the universe lying above some member of the family."""
    fam = list(family)
    return frozenset(u for u in universe if any(f <= u for f in fam))


# Abstract predicates on sets of elements, used to test the ultrafilter
# characterisations independently of the atom representation.

def is_filter(family: frozenset[AtomSet], universe: list[AtomSet]) -> bool:
    if not family:
        return False
    if any(not f for f in family):
        return False
    for x, y in combinations(list(family), 2):
        if (x & y) not in family:
            return False
    return all(u in family for u in universe if any(f <= u for f in family))


def is_prime_filter(family: frozenset[AtomSet], universe: list[AtomSet]) -> bool:
    if not is_filter(family, universe):
        return False
    for x in universe:
        for y in universe:
            if (x | y) in family and x not in family and y not in family:
                return False
    return True


def is_maximal_filter(family: frozenset[AtomSet], universe: list[AtomSet]) -> bool:
    """No strictly larger proper filter exists."""
    if not is_filter(family, universe):
        return False
    for x in universe:
        if x in family or not x:
            continue
        # smallest filter containing family and x
        grown = frozenset(u for u in universe if any((f & x) <= u for f in family))
        if is_filter(grown, universe):
            return False
    return True


def meets_every_nonzero_criterion(family: frozenset[AtomSet], universe: list[AtomSet]) -> bool:
    """A filter is maximal iff every x meeting all members lies in it."""
    if not is_filter(family, universe):
        return False
    for x in universe:
        if all(x & f for f in family) and x not in family:
            return False
    return True
