"""Generic Dijkstra: label-setting search over resource intervals.

The engine keeps, per vertex, a set of permanent labels ``P_v`` and a set of
tentative labels ``T_v``. Tentative labels live in one priority queue ordered
by cost, then by the interval order (lower endpoint first, wider first), then
by vertex id. Dominated tentative labels are dropped from ``T_v`` and left in
the heap as stale entries.
"""
from __future__ import annotations

import heapq
import itertools
from typing import Literal, Optional

from . import _backend
from .graph import Edge, Graph
from .intervals import ResourceInterval
from .labels import Label, extend, label_key, label_preceq
from .tree import EfficientPathTree, SearchStats, extract_path

__all__ = [
    "InvalidSourceError",
    "TentativeStore",
    "generic_dijkstra",
    "relax",
    "extract_path",
]

Mode = Literal["pruned", "no-prune"]


class InvalidSourceError(ValueError):
    pass


def _label_bound(u: int) -> int:
    return ((u + 1) * u // 2) ** 2


class TentativeStore:
    """Tentative label sets plus the heap that orders them.

    ``order="cost-only"`` reproduces the original cost-only queue with an
    adversarial tie-break (reverse interval order among equal costs). It
    exists only to demonstrate why the interval tie-break is needed.
    """

    def __init__(self, vertex_count: int, order: str = "corrected") -> None:
        if order not in ("corrected", "cost-only"):
            raise ValueError(f"unknown queue order {order!r}")
        self.sets: list[dict[int, Label]] = [{} for _ in range(vertex_count)]
        self._heap: list[tuple] = []
        self._seq = itertools.count()
        self._order = order
        self._live = 0

    def __len__(self) -> int:
        return self._live

    def __getitem__(self, v: int) -> list[Label]:
        return list(self.sets[v].values())

    def insert(self, v: int, label: Label) -> None:
        seq = next(self._seq)
        self.sets[v][seq] = label
        self._live += 1
        if self._order == "corrected":
            key = (label.cost, label.ri.lo, -label.ri.hi, v, seq)
        else:
            key = (label.cost, -label.ri.lo, label.ri.hi, v, seq)
        heapq.heappush(self._heap, key)

    def discard_dominated_by(self, v: int, label: Label) -> None:
        tv = self.sets[v]
        gone = [seq for seq, t in tv.items() if label_preceq(label, t)]
        for seq in gone:
            del tv[seq]
        self._live -= len(gone)

    def pop(self) -> tuple[int, Label]:
        heap = self._heap
        while heap:
            entry = heapq.heappop(heap)
            v, seq = entry[3], entry[4]
            label = self.sets[v].pop(seq, None)
            if label is not None:
                self._live -= 1
                return v, label
        raise IndexError("pop from empty tentative store")


def relax(edge: Edge, label: Label, tree: EfficientPathTree, store: TentativeStore) -> TentativeStore:
    """Offer every candidate of ``label + edge`` to the target's tentative set."""
    v2 = edge.target
    perm = tree.labels[v2]
    for cand in extend(label, edge):
        if any(label_preceq(p, cand) for p in perm):
            continue
        if any(label_preceq(t, cand) for t in store.sets[v2].values()):
            continue
        store.discard_dominated_by(v2, cand)
        store.insert(v2, cand)
    return store


def _visits(g: Graph, source: int, label: Label, v: int) -> bool:
    node: Optional[Label] = label
    while node is not None and node.via_edge is not None:
        if g.edges[node.via_edge].target == v:
            return True
        node = node.parent
    return source == v


def _relax_no_prune(
    g: Graph, source: int, edge: Edge, label: Label, store: TentativeStore, seen: list[set]
) -> None:
    v2 = edge.target
    if _visits(g, source, label, v2):
        return
    for cand in extend(label, edge):
        if cand.pair in seen[v2]:
            continue
        seen[v2].add(cand.pair)
        store.insert(v2, cand)


def _min_set(labels: list[Label]) -> list[Label]:
    kept: list[Label] = []
    for l in sorted(labels, key=label_key):
        if not any(label_preceq(k, l) for k in kept):
            kept.append(l)
    return kept


def _search_python(
    g: Graph, s: int, mode: Mode, order: str, record: bool
) -> EfficientPathTree:
    n = g.vertex_count
    tree = EfficientPathTree(s, g.unit_count, [[] for _ in range(n)], SearchStats("python"))
    store = TentativeStore(n, order)
    store.insert(s, Label(0, ResourceInterval(0, g.unit_count)))
    seen: list[set] = [set() for _ in range(n)]
    seen[s].add((0, 0, g.unit_count))
    prune = mode == "pruned"
    limit = n * _label_bound(g.unit_count)
    log: Optional[list] = [] if record else None
    popped = 0
    while store:
        v, label = store.pop()
        popped += 1
        if prune:
            assert popped <= limit, "popped more labels than the search-space bound allows"
        tree.labels[v].append(label)
        if log is not None:
            log.append((v, label))
        for e in g.out_edges(v):
            if prune:
                relax(e, label, tree, store)
            else:
                _relax_no_prune(g, s, e, label, store, seen)
    if not prune:
        tree.labels = [_min_set(lst) for lst in tree.labels]
    tree.canonicalize()
    tree.stats.popped = popped
    tree.stats.max_labels = max(len(lst) for lst in tree.labels)
    tree.stats.pop_log = log
    return tree


def _search_compiled(g: Graph, s: int) -> EfficientPathTree:
    costs, los, his, verts, edges, parents, popped = _backend.run_compiled(g, s, g.vertex_count * _label_bound(g.unit_count))
    n = g.vertex_count
    tree = EfficientPathTree(s, g.unit_count, [[] for _ in range(n)], SearchStats("compiled"))
    made: list[Label] = []
    for k in range(len(costs)):
        parent = made[parents[k]] if parents[k] >= 0 else None
        via = edges[k] if edges[k] >= 0 else None
        lab = Label(costs[k], ResourceInterval(los[k], his[k]), via, parent)
        made.append(lab)
        tree.labels[verts[k]].append(lab)
    tree.canonicalize()
    tree.stats.popped = popped
    tree.stats.max_labels = max(len(lst) for lst in tree.labels)
    return tree


def generic_dijkstra(
    g: Graph,
    s: int,
    mode: Mode = "pruned",
    *,
    backend: Optional[str] = None,
    record: bool = False,
    queue_order: str = "corrected",
) -> EfficientPathTree:
    """Compute the efficient-path tree rooted at ``s``.

    ``mode="no-prune"`` skips dominance discarding during relaxation; only
    loops and exact duplicates are rejected, and the permanent sets are
    reduced to their minimal elements at the end. It is exponential and
    meant for validation on small graphs.

    ``backend`` is ``"compiled"``, ``"python"`` or ``None`` (compiled when it
    is importable and applicable). ``record`` keeps the pop sequence in
    ``tree.stats.pop_log`` and forces the Python engine.
    """
    if isinstance(s, bool) or not isinstance(s, int) or not 0 <= s < g.vertex_count:
        raise InvalidSourceError(f"source {s!r} is not a vertex of a {g.vertex_count}-vertex graph")
    if mode not in ("pruned", "no-prune"):
        raise ValueError(f"unknown mode {mode!r}")
    compiled_ok = (
        mode == "pruned"
        and queue_order == "corrected"
        and not record
        and _backend.compiled_applicable(g)
    )
    if backend is None:
        backend = "compiled" if compiled_ok else "python"
    if backend == "compiled":
        if not compiled_ok:
            raise ValueError("compiled backend unavailable or not applicable to this request")
        return _search_compiled(g, s)
    if backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return _search_python(g, s, mode, queue_order, record)
