"""Per-vertex efficient label sets and their JSON form."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence, Union

from .intervals import ResourceInterval
from .labels import Label, label_key

__all__ = ["SearchStats", "EfficientPathTree", "extract_path", "load_result", "ResultError"]


class ResultError(ValueError):
    """Raised when a result document is malformed."""


@dataclass
class SearchStats:
    backend: str = "python"
    popped: int = 0
    max_labels: int = 0
    pop_log: Optional[list[tuple[int, Label]]] = None


@dataclass
class EfficientPathTree:
    """Permanent labels for every vertex, each list sorted in queue order."""

    source: int
    unit_count: int
    labels: list[list[Label]]
    stats: SearchStats = field(default_factory=SearchStats)

    def __getitem__(self, v: int) -> list[Label]:
        return self.labels[v]

    def __len__(self) -> int:
        return len(self.labels)

    def canonicalize(self) -> None:
        for lst in self.labels:
            lst.sort(key=label_key)

    def label_sets(self) -> list[set[tuple[int, int, int]]]:
        """Per-vertex ``{(cost, lo, hi)}`` sets, ignoring provenance."""
        return [{l.pair for l in lst} for lst in self.labels]

    def path(self, label: Label) -> list[int]:
        return extract_path(self, label)

    def to_document(self) -> dict[str, Any]:
        return {
            "source": self.source,
            "vertices": [
                {
                    "id": v,
                    "labels": [
                        {"cost": l.cost, "ri": l.ri.as_list(), "path": extract_path(self, l)}
                        for l in sorted(lst, key=label_key)
                    ],
                }
                for v, lst in enumerate(self.labels)
            ],
        }

    def dumps(self) -> str:
        doc = self.to_document()
        rows = []
        for vert in doc["vertices"]:
            rows.append("  " + json.dumps(vert, separators=(", ", ": ")))
        return '{"source": %d, "vertices": [\n%s\n]}\n' % (doc["source"], ",\n".join(rows))


def extract_path(tree: EfficientPathTree, label: Label) -> list[int]:
    """Edge ids from the source to the label's vertex, following parents."""
    edges = []
    node: Optional[Label] = label
    while node is not None and node.via_edge is not None:
        edges.append(node.via_edge)
        node = node.parent
    edges.reverse()
    return edges


def load_result(text: Union[str, bytes], vertex_count: Optional[int] = None) -> tuple[int, list[list[Label]]]:
    """Parse a result document into ``(source, per-vertex labels)``.

    Provenance is not reconstructed; labels carry only cost and interval.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ResultError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "vertices" not in doc or "source" not in doc:
        raise ResultError("result must be an object with 'source' and 'vertices'")
    verts = doc["vertices"]
    if not isinstance(verts, list):
        raise ResultError("field 'vertices' must be a list")
    n = vertex_count if vertex_count is not None else 1 + max((v.get("id", -1) for v in verts if isinstance(v, dict)), default=-1)
    out: list[list[Label]] = [[] for _ in range(max(n, 0))]
    for vert in verts:
        try:
            vid = vert["id"]
            labels = vert["labels"]
            if not 0 <= vid < len(out):
                raise ResultError(f"vertex {vid}: id outside the graph")
            for raw in labels:
                lo, hi = raw["ri"]
                out[vid].append(Label(int(raw["cost"]), ResourceInterval(int(lo), int(hi))))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ResultError):
                raise
            raise ResultError(f"malformed vertex entry {vert!r}: {exc}") from None
    return int(doc["source"]), out


def from_pairs(source: int, unit_count: int, sets: Sequence[Iterable[tuple[int, int, int]]]) -> EfficientPathTree:
    """Build a provenance-free tree from ``(cost, lo, hi)`` triples."""
    labels = [[Label(c, ResourceInterval(lo, hi)) for c, lo, hi in sorted(s, key=lambda t: (t[0], t[1], -t[2]))] for s in sets]
    return EfficientPathTree(source, unit_count, labels)
