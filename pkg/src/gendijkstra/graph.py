"""Directed multigraph with per-edge cost and available units, plus JSON I/O."""
from __future__ import annotations

import json
from dataclasses import dataclass
from os import PathLike
from typing import Any, Optional, Sequence, Union

from .intervals import UnitSet

__all__ = ["Edge", "Graph", "GraphError", "load", "load_file", "save", "to_document"]


class GraphError(ValueError):
    """Raised when a graph document is malformed."""


@dataclass(frozen=True, slots=True)
class Edge:
    id: int
    source: int
    target: int
    cost: int
    au: UnitSet


class Graph:
    """Immutable weighted directed multigraph.

    Self-loops and parallel edges are allowed. Edge ids are dense
    ``0..len(edges)-1`` and adjacency lists are cached at construction.
    """

    __slots__ = ("vertex_count", "unit_count", "edges", "names", "_out", "_in")

    def __init__(
        self,
        vertex_count: int,
        unit_count: int,
        edges: Sequence[Edge],
        names: Optional[Sequence[str]] = None,
    ) -> None:
        if vertex_count < 1:
            raise GraphError("graph needs at least one vertex")
        if unit_count < 1:
            raise GraphError("unit count must be at least 1")
        out: list[list[Edge]] = [[] for _ in range(vertex_count)]
        inc: list[list[Edge]] = [[] for _ in range(vertex_count)]
        for k, e in enumerate(edges):
            if e.id != k:
                raise GraphError(f"edge {e.id}: field 'id' must equal its position {k}")
            for fld in ("source", "target"):
                v = getattr(e, fld)
                if not 0 <= v < vertex_count:
                    raise GraphError(f"edge {e.id}: field '{fld}' refers to unknown vertex {v}")
            if e.cost < 0:
                raise GraphError(f"edge {e.id}: field 'cost' must be non-negative")
            if e.au.size != unit_count:
                raise GraphError(f"edge {e.id}: field 'au' sized for {e.au.size} units, not {unit_count}")
            out[e.source].append(e)
            inc[e.target].append(e)
        if names is not None and len(names) != vertex_count:
            raise GraphError("field 'names' must have one entry per vertex")
        self.vertex_count = vertex_count
        self.unit_count = unit_count
        self.edges: tuple[Edge, ...] = tuple(edges)
        self.names = tuple(names) if names is not None else None
        self._out = tuple(tuple(x) for x in out)
        self._in = tuple(tuple(x) for x in inc)

    def out_edges(self, v: int) -> tuple[Edge, ...]:
        """Edges leaving ``v`` in ascending id order."""
        return self._out[v]

    def in_edges(self, v: int) -> tuple[Edge, ...]:
        return self._in[v]

    def with_edges(self, edges: Sequence[Edge]) -> Graph:
        """Same vertices and units, different edge list (ids are renumbered)."""
        renum = [Edge(k, e.source, e.target, e.cost, e.au) for k, e in enumerate(edges)]
        return Graph(self.vertex_count, self.unit_count, renum, self.names)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count
            and self.unit_count == other.unit_count
            and self.edges == other.edges
            and self.names == other.names
        )

    def __repr__(self) -> str:
        return f"Graph(vertices={self.vertex_count}, edges={len(self.edges)}, units={self.unit_count})"


def _int_field(obj: dict, name: str, where: str) -> int:
    if name not in obj:
        raise GraphError(f"{where}: missing field '{name}'")
    v = obj[name]
    if isinstance(v, bool) or not isinstance(v, int):
        raise GraphError(f"{where}: field '{name}' must be an integer")
    return v


def _parse_au(raw: dict, units: int, where: str) -> UnitSet:
    if "au" in raw:
        ivs = raw["au"]
        if not isinstance(ivs, list):
            raise GraphError(f"{where}: field 'au' must be a list of [lo, hi] pairs")
        prev_hi = -1
        pairs = []
        for iv in ivs:
            if (
                not isinstance(iv, list)
                or len(iv) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in iv)
            ):
                raise GraphError(f"{where}: field 'au' entries must be [lo, hi] integer pairs")
            lo, hi = iv
            if not 0 <= lo < hi:
                raise GraphError(f"{where}: field 'au' has empty or negative interval [{lo},{hi})")
            if hi > units:
                raise GraphError(f"{where}: field 'au' interval [{lo},{hi}) exceeds unit count {units}")
            if lo <= prev_hi:
                raise GraphError(f"{where}: field 'au' intervals must be sorted, disjoint and non-adjacent")
            prev_hi = hi
            pairs.append((lo, hi))
        return UnitSet.from_intervals(units, pairs)
    if "au_units" in raw:
        lst = raw["au_units"]
        if not isinstance(lst, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in lst):
            raise GraphError(f"{where}: field 'au_units' must be a list of integers")
        try:
            return UnitSet.from_units(units, lst)
        except ValueError as exc:
            raise GraphError(f"{where}: field 'au_units': {exc}") from None
    raise GraphError(f"{where}: missing field 'au'")


def from_document(doc: Any) -> Graph:
    if not isinstance(doc, dict):
        raise GraphError("graph document must be a JSON object")
    units = _int_field(doc, "units", "graph")
    vertices = _int_field(doc, "vertices", "graph")
    if units < 1:
        raise GraphError("graph: field 'units' must be at least 1")
    if vertices < 1:
        raise GraphError("graph: field 'vertices' must be at least 1")
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise GraphError("graph: field 'edges' must be a list")
    edges = []
    for k, raw in enumerate(raw_edges):
        where = f"edge {raw.get('id', k) if isinstance(raw, dict) else k}"
        if not isinstance(raw, dict):
            raise GraphError(f"{where}: must be an object")
        eid = _int_field(raw, "id", where)
        if eid != k:
            raise GraphError(f"{where}: field 'id' must be {k} (ids are dense and ordered)")
        src = _int_field(raw, "source", where)
        dst = _int_field(raw, "target", where)
        for name, v in (("source", src), ("target", dst)):
            if not 0 <= v < vertices:
                raise GraphError(f"{where}: field '{name}' refers to unknown vertex {v}")
        cost = _int_field(raw, "cost", where)
        if cost < 0:
            raise GraphError(f"{where}: field 'cost' must be non-negative")
        edges.append(Edge(eid, src, dst, cost, _parse_au(raw, units, where)))
    names = doc.get("names")
    if names is not None and (
        not isinstance(names, list) or not all(isinstance(n, str) for n in names)
    ):
        raise GraphError("graph: field 'names' must be a list of strings")
    return Graph(vertices, units, edges, names)


def load(text: Union[str, bytes]) -> Graph:
    """Parse a graph from its JSON text."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from None
    return from_document(doc)


def load_file(path: Union[str, PathLike]) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return load(fh.read())


def to_document(g: Graph) -> dict:
    doc: dict[str, Any] = {"units": g.unit_count, "vertices": g.vertex_count}
    if g.names is not None:
        doc["names"] = list(g.names)
    doc["edges"] = [
        {
            "id": e.id,
            "source": e.source,
            "target": e.target,
            "cost": e.cost,
            "au": [[lo, hi] for lo, hi in e.au.runs()],
        }
        for e in g.edges
    ]
    return doc


def save(g: Graph) -> str:
    """Canonical JSON text: fixed field order, one edge per line."""
    doc = to_document(g)
    head = [f'"units": {doc["units"]}', f'"vertices": {doc["vertices"]}']
    if "names" in doc:
        head.append(f'"names": {json.dumps(doc["names"])}')
    if not doc["edges"]:
        return "{" + ", ".join(head + ['"edges": []']) + "}\n"
    lines = ",\n".join("  " + json.dumps(e, separators=(", ", ": ")) for e in doc["edges"])
    return "{" + ", ".join(head) + ', "edges": [\n' + lines + "\n]}\n"
