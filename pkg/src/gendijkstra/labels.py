"""Labels: a path summarised as (cost, resource interval) plus provenance."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional

from .intervals import ResourceInterval, intersect, ri_less

if TYPE_CHECKING:
    from .graph import Edge

__all__ = [
    "Dominance",
    "Label",
    "label_dominates",
    "label_less",
    "label_preceq",
    "label_key",
    "extend",
]


class Dominance(enum.Enum):
    BETTER = "better"
    EQUAL = "equal"
    WORSE = "worse"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True, slots=True, eq=False)
class Label:
    """Cost and interval of one path, with a back-pointer to its parent.

    Equality and hashing look at ``(cost, ri)`` only; two labels describing
    equivalent paths compare equal regardless of how they were reached.
    """

    cost: int
    ri: ResourceInterval
    via_edge: Optional[int] = None
    parent: Optional[Label] = field(default=None, repr=False)

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.cost, self.ri.lo, -self.ri.hi)

    @property
    def pair(self) -> tuple[int, int, int]:
        """Plain ``(cost, lo, hi)`` triple, handy for set comparisons."""
        return (self.cost, self.ri.lo, self.ri.hi)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Label):
            return NotImplemented
        return self.cost == other.cost and self.ri == other.ri

    def __hash__(self) -> int:
        return hash((self.cost, self.ri.lo, self.ri.hi))

    def __lt__(self, other: Label) -> bool:
        return label_less(self, other)


def label_preceq(a: Label, b: Label) -> bool:
    """True if ``a`` is better than or equal to ``b``."""
    return a.cost <= b.cost and a.ri.lo <= b.ri.lo and a.ri.hi >= b.ri.hi


def label_dominates(a: Label, b: Label) -> Dominance:
    ab = label_preceq(a, b)
    ba = label_preceq(b, a)
    if ab and ba:
        return Dominance.EQUAL
    if ab:
        return Dominance.BETTER
    if ba:
        return Dominance.WORSE
    return Dominance.INCOMPARABLE


def label_less(a: Label, b: Label) -> bool:
    """Queue order: cost first, then the interval order."""
    return a.cost < b.cost or (a.cost == b.cost and ri_less(a.ri, b.ri))


def label_key(label: Label) -> tuple[int, int, int]:
    return (label.cost, label.ri.lo, -label.ri.hi)


def extend(label: Label, edge: Edge) -> list[Label]:
    """Candidate labels for appending ``edge`` to the path of ``label``.

    One candidate per maximal run of ``RI(label) & AU(edge)``, ascending by
    lower endpoint. Empty intersections produce nothing.
    """
    cost = label.cost + edge.cost
    return [Label(cost, r, edge.id, label) for r in intersect(label.ri, edge.au)]
