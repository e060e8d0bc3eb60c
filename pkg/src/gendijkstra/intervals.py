"""Resource intervals and unit sets.

A resource interval is a half-closed run ``[lo, hi)`` of contiguous units.
A unit set is an arbitrary subset of ``[0, U)`` stored as a bit-vector
(a Python int, so there is no upper limit on ``U``).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "Inclusion",
    "ResourceInterval",
    "UnitSet",
    "ri_includes",
    "ri_less",
    "ri_key",
    "decompose",
    "intersect",
    "all_intervals",
]

MAX_UNIT = 2**32 - 1


class Inclusion(enum.Enum):
    PROPER_SUPERSET = "proper-superset"
    EQUAL = "equal"
    PROPER_SUBSET = "proper-subset"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True, slots=True)
class ResourceInterval:
    """Half-closed interval ``[lo, hi)`` of unit indices, never empty."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not (0 <= self.lo < self.hi <= MAX_UNIT):
            raise ValueError(f"invalid resource interval [{self.lo},{self.hi})")

    def __len__(self) -> int:
        return self.hi - self.lo

    def __contains__(self, unit: int) -> bool:
        return self.lo <= unit < self.hi

    def issuperset(self, other: ResourceInterval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def issubset(self, other: ResourceInterval) -> bool:
        return other.issuperset(self)

    @property
    def mask(self) -> int:
        return ((1 << self.hi) - 1) ^ ((1 << self.lo) - 1)

    def as_list(self) -> list[int]:
        return [self.lo, self.hi]

    def __repr__(self) -> str:
        return f"[{self.lo},{self.hi})"


def ri_includes(a: ResourceInterval, b: ResourceInterval) -> Inclusion:
    """Classify how ``a`` relates to ``b`` under inclusion."""
    if a.lo == b.lo and a.hi == b.hi:
        return Inclusion.EQUAL
    if a.lo <= b.lo and a.hi >= b.hi:
        return Inclusion.PROPER_SUPERSET
    if a.lo >= b.lo and a.hi <= b.hi:
        return Inclusion.PROPER_SUBSET
    return Inclusion.INCOMPARABLE


def ri_less(a: ResourceInterval, b: ResourceInterval) -> bool:
    """Strict interval order: lower endpoint first, wider interval first on ties.

    This extends proper inclusion: a proper superset always sorts first.
    """
    return a.lo < b.lo or (a.lo == b.lo and a.hi > b.hi)


def ri_key(r: ResourceInterval) -> tuple[int, int]:
    """Sort key consistent with :func:`ri_less`."""
    return (r.lo, -r.hi)


def _runs(bits: int) -> Iterator[tuple[int, int]]:
    while bits:
        lo = (bits & -bits).bit_length() - 1
        shifted = bits >> lo
        length = ((shifted + 1) & ~shifted).bit_length() - 1
        yield lo, lo + length
        bits &= ~(((1 << length) - 1) << lo)


class UnitSet:
    """Immutable set of units in ``[0, size)`` backed by a bit-vector."""

    __slots__ = ("_bits", "_size")

    def __init__(self, size: int, bits: int = 0) -> None:
        if size < 0:
            raise ValueError("unit count must be non-negative")
        if bits < 0 or bits >> size:
            raise ValueError(f"unit set has members outside [0,{size})")
        self._size = size
        self._bits = bits

    @classmethod
    def from_units(cls, size: int, units: Iterable[int]) -> UnitSet:
        bits = 0
        for u in units:
            if not 0 <= u < size:
                raise ValueError(f"unit {u} outside [0,{size})")
            bits |= 1 << u
        return cls(size, bits)

    @classmethod
    def from_intervals(cls, size: int, intervals: Iterable[tuple[int, int]]) -> UnitSet:
        bits = 0
        for lo, hi in intervals:
            if not 0 <= lo < hi <= size:
                raise ValueError(f"interval [{lo},{hi}) outside [0,{size})")
            bits |= ((1 << hi) - 1) ^ ((1 << lo) - 1)
        return cls(size, bits)

    @classmethod
    def full(cls, size: int) -> UnitSet:
        return cls(size, (1 << size) - 1)

    @property
    def size(self) -> int:
        return self._size

    @property
    def bits(self) -> int:
        return self._bits

    def __contains__(self, unit: int) -> bool:
        return unit >= 0 and bool(self._bits >> unit & 1)

    def __iter__(self) -> Iterator[int]:
        for lo, hi in _runs(self._bits):
            yield from range(lo, hi)

    def __len__(self) -> int:
        return bin(self._bits).count("1")

    def __bool__(self) -> bool:
        return self._bits != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnitSet):
            return NotImplemented
        return self._size == other._size and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._size, self._bits))

    def __and__(self, other: UnitSet) -> UnitSet:
        return UnitSet(min(self._size, other._size), self._bits & other._bits)

    def issuperset(self, r: ResourceInterval) -> bool:
        m = r.mask
        return self._bits & m == m

    def runs(self) -> list[tuple[int, int]]:
        return list(_runs(self._bits))

    def __repr__(self) -> str:
        body = ", ".join(f"[{lo},{hi})" for lo, hi in _runs(self._bits))
        return f"UnitSet({self._size}, {{{body}}})"


def decompose(s: UnitSet) -> list[ResourceInterval]:
    """Split ``s`` into maximal contiguous intervals, ascending by ``lo``."""
    return [ResourceInterval(lo, hi) for lo, hi in _runs(s.bits)]


def intersect(r: ResourceInterval, s: UnitSet) -> list[ResourceInterval]:
    """Maximal contiguous intervals of ``s`` restricted to ``r``."""
    return [ResourceInterval(lo, hi) for lo, hi in _runs(s.bits & r.mask)]


def all_intervals(size: int) -> Iterator[ResourceInterval]:
    """Every nonempty interval within ``[0, size)``; there are size*(size+1)/2."""
    for lo in range(size):
        for hi in range(lo + 1, size + 1):
            yield ResourceInterval(lo, hi)
