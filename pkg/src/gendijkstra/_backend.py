"""Selects the compiled search kernel when it is importable.

Set ``GENDIJKSTRA_PURE=1`` to force the pure-Python engine.
"""
from __future__ import annotations

import os
from array import array

try:
    if os.environ.get("GENDIJKSTRA_PURE"):
        raise ImportError("pure-Python engine requested")
    from . import _core  # type: ignore[attr-defined]
except ImportError:
    _core = None

HAVE_COMPILED = _core is not None

_COST_LIMIT = 2**63
_PACKED: "dict[int, tuple]" = {}


def compiled_applicable(g) -> bool:
    if _core is None:
        return False
    # label costs are sums along simple paths, bounded by the total edge cost
    return sum(e.cost for e in g.edges) < _COST_LIMIT and len(g.edges) < 2**31 and g.vertex_count < 2**31


def _pack(g) -> tuple:
    src = array("i", (e.source for e in g.edges))
    dst = array("i", (e.target for e in g.edges))
    cost = array("Q", (e.cost for e in g.edges))
    run_ptr = array("q", [0])
    run_lo = array("I")
    run_hi = array("I")
    for e in g.edges:
        for lo, hi in e.au.runs():
            run_lo.append(lo)
            run_hi.append(hi)
        run_ptr.append(len(run_lo))
    out_ptr = array("q", [0])
    out_idx = array("i")
    for v in range(g.vertex_count):
        out_idx.extend(e.id for e in g.out_edges(v))
        out_ptr.append(len(out_idx))
    return src, dst, cost, run_ptr, run_lo, run_hi, out_ptr, out_idx


def run_compiled(g, s: int, max_pops: int):
    key = id(g)
    cached = _PACKED.get(key)
    if cached is None or cached[0] is not g:
        if len(_PACKED) > 64:
            _PACKED.clear()
        cached = (g, _pack(g))
        _PACKED[key] = cached
    packed = cached[1]
    return _core.search(g.vertex_count, g.unit_count, *packed, s, max_pops)
