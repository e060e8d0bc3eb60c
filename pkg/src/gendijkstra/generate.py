"""Seeded random instances and the small hand-built ones used in tests."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Edge, Graph
from .intervals import UnitSet
from .rng import SplitMix64

__all__ = ["GenSpec", "generate", "instance_seeds", "fig1_graph", "trivial_graph"]


@dataclass(frozen=True)
class GenSpec:
    vertices: int
    edges: int
    units: int
    max_cost: int = 10
    fill: float = 0.6
    seed: int = 0

    def __post_init__(self) -> None:
        if self.vertices < 1:
            raise ValueError("vertices must be at least 1")
        if self.edges < 0:
            raise ValueError("edges must be non-negative")
        if self.units < 1:
            raise ValueError("units must be at least 1")
        if self.max_cost < 0:
            raise ValueError("max_cost must be non-negative")
        if not 0.0 <= self.fill <= 1.0:
            raise ValueError("fill must lie in [0, 1]")


def generate(spec: GenSpec) -> Graph:
    """Deterministic instance for ``spec``.

    Topology and costs come from the first split stream and availability
    from the second, so changing ``units`` or ``fill`` at a fixed seed keeps
    the same endpoints and costs.
    """
    root = SplitMix64(spec.seed)
    topo = root.split()
    avail = root.split()
    edges = []
    for k in range(spec.edges):
        src = topo.below(spec.vertices)
        dst = topo.below(spec.vertices)
        cost = topo.below(spec.max_cost + 1)
        bits = 0
        for u in range(spec.units):
            if avail.random() < spec.fill:
                bits |= 1 << u
        edges.append(Edge(k, src, dst, cost, UnitSet(spec.units, bits)))
    return Graph(spec.vertices, spec.units, edges)


def instance_seeds(seed: int, count: int) -> Iterator[int]:
    rng = SplitMix64(seed)
    for _ in range(count):
        yield rng.next()


def fig1_graph() -> Graph:
    """The three-vertex instance where a cost-only queue goes wrong.

    Vertices ``s=0, u=1, t=2``; edges ``e1: s->t (1, [0,1))``,
    ``e2: s->u (1, [0,2))``, ``e3: u->t (0, [0,2))``.
    """
    U = 2
    return Graph(
        3,
        U,
        [
            Edge(0, 0, 2, 1, UnitSet.from_intervals(U, [(0, 1)])),
            Edge(1, 0, 1, 1, UnitSet.from_intervals(U, [(0, 2)])),
            Edge(2, 1, 2, 0, UnitSet.from_intervals(U, [(0, 2)])),
        ],
        names=["s", "u", "t"],
    )


def trivial_graph(units: int = 1) -> Graph:
    return Graph(1, units, [])
