"""Independent checks for the search engine.

* :func:`oracle_solve` brute-forces the answer with one textbook Dijkstra
  run per contiguous interval on the graph filtered to that interval.
* :func:`check_optimality` tests the fixed-point property: each vertex's
  set equals the minimal elements of everything its in-edges can derive.
* :func:`label_bound` and :func:`antichain_bound` size the search space.

Nothing here imports the search engine.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .graph import Edge, Graph
from .intervals import ResourceInterval, all_intervals
from .labels import Label, extend, label_key, label_preceq
from .tree import EfficientPathTree, SearchStats

__all__ = [
    "min_set",
    "filtered_graph",
    "dijkstra",
    "oracle_solve",
    "check_optimality",
    "check_path",
    "Violation",
    "CheckReport",
    "label_bound",
    "antichain_bound",
]


def min_set(labels: Iterable[Label]) -> list[Label]:
    """Labels not dominated by any other; equal duplicates keep the first seen.

    A dominating label always precedes the label it dominates in queue
    order, so one sorted sweep against the kept prefix is enough.
    """
    kept: list[Label] = []
    for l in sorted(labels, key=label_key):
        if not any(label_preceq(k, l) for k in kept):
            kept.append(l)
    return kept


def filtered_graph(g: Graph, r: ResourceInterval) -> Graph:
    """Keep only edges on which every unit of ``r`` is available.

    Edge ids are renumbered densely; :func:`filtered_edge_ids` gives the
    original ids in the same order.
    """
    return g.with_edges([e for e in g.edges if e.au.issuperset(r)])


def filtered_edge_ids(g: Graph, r: ResourceInterval) -> list[int]:
    return [e.id for e in g.edges if e.au.issuperset(r)]


def dijkstra(g: Graph, s: int) -> tuple[list[Optional[int]], list[Optional[int]]]:
    """Plain single-label Dijkstra: distances and predecessor edge ids."""
    dist: list[Optional[int]] = [None] * g.vertex_count
    pred: list[Optional[int]] = [None] * g.vertex_count
    done = [False] * g.vertex_count
    dist[s] = 0
    heap = [(0, s)]
    while heap:
        d, v = heapq.heappop(heap)
        if done[v]:
            continue
        done[v] = True
        for e in g.out_edges(v):
            nd = d + e.cost
            w = e.target
            if not done[w] and (dist[w] is None or nd < dist[w]):
                dist[w] = nd
                pred[w] = e.id
                heapq.heappush(heap, (nd, w))
    return dist, pred


def oracle_solve(g: Graph, s: int) -> EfficientPathTree:
    """Efficient labels by exhaustive search over all U(U+1)/2 intervals.

    Each returned label's parent chain is a witness path from that
    interval's Dijkstra run; intermediate chain labels carry the same
    interval rather than a maximal one.
    """
    if not 0 <= s < g.vertex_count:
        raise ValueError(f"source {s!r} is not a vertex of a {g.vertex_count}-vertex graph")
    found: list[list[Label]] = [[] for _ in range(g.vertex_count)]
    for r in all_intervals(g.unit_count):
        ids = filtered_edge_ids(g, r)
        dist, pred = dijkstra(filtered_graph(g, r), s)
        chain: dict[int, Label] = {}

        def witness(v: int) -> Label:
            if v in chain:
                return chain[v]
            stack = []
            w = v
            while w not in chain and pred[w] is not None and w != s:
                stack.append(w)
                w = g.edges[ids[pred[w]]].source
            base = chain.get(w) or Label(0, r)
            chain.setdefault(w, base)
            for u in reversed(stack):
                eid = ids[pred[u]]
                base = Label(dist[u], r, eid, base)
                chain[u] = base
            return chain[v]

        for v, d in enumerate(dist):
            if d is not None:
                found[v].append(witness(v))
    labels = [min_set(lst) for lst in found]
    return EfficientPathTree(s, g.unit_count, labels, SearchStats("oracle"))


@dataclass(frozen=True)
class Violation:
    vertex: int
    kind: str  # "missing" | "extra" | "dominated"
    label: Label

    def to_document(self) -> dict:
        return {
            "vertex": self.vertex,
            "kind": self.kind,
            "label": {"cost": self.label.cost, "ri": self.label.ri.as_list()},
        }


@dataclass
class CheckReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None

    def __bool__(self) -> bool:
        return self.ok


def check_optimality(
    g: Graph, s: int, result: Union[EfficientPathTree, Sequence[Iterable[Label]]]
) -> CheckReport:
    """Verify the fixed point, reporting violations in ascending vertex order.

    For the source the expected set is ``{(0, [0, U))}``; for every other
    vertex it is the minimal set of all candidates derived over in-edges
    from the *given* sets of the edge sources.
    """
    sets = [list(x) for x in (result.labels if isinstance(result, EfficientPathTree) else result)]
    sets += [[] for _ in range(g.vertex_count - len(sets))]
    report = CheckReport()
    for v in range(g.vertex_count):
        if v == s:
            expected = [Label(0, ResourceInterval(0, g.unit_count))]
            candidates = expected
        else:
            candidates = [c for e in g.in_edges(v) for l in sets[e.source] for c in extend(l, e)]
            expected = min_set(candidates)
        want = {l.pair for l in expected}
        seen: set = set()
        for l in sorted(sets[v], key=label_key):
            if l.pair in want and l.pair not in seen:
                seen.add(l.pair)
                continue
            if any(label_preceq(c, l) and c.pair != l.pair for c in candidates) or any(
                label_preceq(o, l) and o.pair != l.pair for o in sets[v]
            ):
                report.violations.append(Violation(v, "dominated", l))
            else:
                report.violations.append(Violation(v, "extra", l))
        for l in expected:
            if l.pair not in seen:
                report.violations.append(Violation(v, "missing", l))
    return report


def check_path(g: Graph, s: int, v: int, label: Label, path: Sequence[int]) -> bool:
    """Recompute cost and units along ``path`` and compare with ``label``."""
    at = s
    cost = 0
    for eid in path:
        if not 0 <= eid < len(g.edges):
            return False
        e: Edge = g.edges[eid]
        if e.source != at or not e.au.issuperset(label.ri):
            return False
        cost += e.cost
        at = e.target
    return at == v and cost == label.cost and label.ri.hi <= g.unit_count


def antichain_bound(u: int) -> int:
    """Largest possible set of pairwise incomparable labels at one vertex."""
    if u < 1:
        raise ValueError("unit count must be at least 1")
    return (u + 1) * u // 2


def label_bound(u: int) -> int:
    """Per-vertex label bound S, the square of :func:`antichain_bound`."""
    return antichain_bound(u) ** 2
