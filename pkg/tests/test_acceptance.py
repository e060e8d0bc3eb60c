"""Exit criteria. Each test prints a verdict line in the terminal summary."""
import itertools
import subprocess
import sys
import time

import pytest

from gendijkstra import GenSpec, fig1_graph, generate, generic_dijkstra
from gendijkstra.generate import instance_seeds
from gendijkstra.intervals import ResourceInterval as RI, all_intervals, ri_includes, Inclusion, ri_less
from gendijkstra.labels import Dominance, Label, label_dominates, label_less
from gendijkstra.oracle import antichain_bound, check_optimality, check_path, label_bound, min_set, oracle_solve

FILLS = (0.3, 0.6, 0.9)


def _campaign_specs(count=1000, seed=20240601):
    for k, s in enumerate(instance_seeds(seed, count)):
        yield GenSpec(
            vertices=1 + s % 20,
            edges=(s >> 8) % 81,
            units=1 + (s >> 16) % 8,
            max_cost=(s >> 24) % 11,
            fill=FILLS[k % 3],
            seed=s,
        )


@pytest.fixture(scope="module")
def campaign():
    t0 = time.perf_counter()
    runs = []
    for spec in _campaign_specs():
        g = generate(spec)
        runs.append((g, generic_dijkstra(g, 0), oracle_solve(g, 0)))
    return runs, time.perf_counter() - t0


@pytest.mark.acceptance("C1 counterexample regression (corrected exact; cost-only build returns {(1,[0,1))})")
def test_c1_fig1_regression():
    t0 = time.perf_counter()
    g = fig1_graph()
    corrected = generic_dijkstra(g, 0).label_sets()
    flawed = generic_dijkstra(g, 0, queue_order="cost-only").label_sets()
    elapsed = time.perf_counter() - t0
    assert corrected[2] == {(1, 0, 2)}
    assert elapsed < 1.0
    assert flawed[2] == {(1, 0, 1)}


@pytest.mark.acceptance("C2 oracle equivalence over 1000 random instances, < 60 s")
def test_c2_oracle_equivalence(campaign):
    runs, elapsed = campaign
    assert len(runs) >= 1000
    specs = list(_campaign_specs())
    assert max(s.vertices for s in specs) <= 20 and max(s.edges for s in specs) <= 80 and max(s.units for s in specs) <= 8
    assert {s.fill for s in specs} == set(FILLS)
    mismatches = [k for k, (g, eng, orc) in enumerate(runs) if eng.label_sets() != orc.label_sets()]
    assert mismatches == []
    for g, eng, orc in runs:
        for tree in (eng, orc):
            for v, lst in enumerate(tree.labels):
                for l in lst:
                    assert check_path(g, 0, v, l, tree.path(l))
    assert elapsed < 60.0


@pytest.mark.acceptance("C3 fixed-point check passes; deletions and dominated injections fail")
def test_c3_fixed_point(campaign):
    runs, _ = campaign
    deletions = injections = 0
    for k, (g, eng, _) in enumerate(runs):
        assert check_optimality(g, 0, eng).ok
        flat = [(v, i) for v, lst in enumerate(eng.labels) for i in range(len(lst))]
        picks = flat if k < 200 else flat[:: max(1, len(flat) // 3)]
        for v, i in picks:
            sets = [list(x) for x in eng.labels]
            gone = sets[v].pop(i)
            report = check_optimality(g, 0, sets)
            assert not report.ok
            assert any(x.kind == "missing" and x.vertex == v and x.label == gone for x in report.violations)
            deletions += 1

            sets = [list(x) for x in eng.labels]
            worse = Label(gone.cost + 1, gone.ri)
            if worse in sets[v]:
                worse = Label(gone.cost + 1 + max(l.cost for l in sets[v]), gone.ri)
            sets[v].append(worse)
            report = check_optimality(g, 0, sets)
            assert not report.ok
            assert any(x.kind == "dominated" and x.vertex == v and x.label == worse for x in report.violations)
            injections += 1
    assert deletions > 1000 and injections > 1000


@pytest.mark.acceptance("C4 order laws (exhaustive): ri_less U<=6, label_less cost<=3 U<=4, dominance implies order")
def test_c4_order_laws():
    for u in range(1, 7):
        ivs = list(all_intervals(u))
        for a, b in itertools.product(ivs, repeat=2):
            assert (ri_less(a, b) + ri_less(b, a)) == (0 if a == b else 1)
            if ri_includes(a, b) is Inclusion.PROPER_SUPERSET:
                assert ri_less(a, b)
        for a, b, c in itertools.product(ivs, repeat=3):
            if ri_less(a, b) and ri_less(b, c):
                assert ri_less(a, c)
    for u in range(1, 5):
        labels = [Label(cost, r) for cost in range(4) for r in all_intervals(u)]
        for a, b in itertools.product(labels, repeat=2):
            assert (label_less(a, b) + label_less(b, a)) == (0 if a == b else 1)
            if label_dominates(a, b) is Dominance.BETTER:
                assert label_less(a, b)
        for a, b, c in itertools.product(labels, repeat=3):
            if label_less(a, b) and label_less(b, c):
                assert label_less(a, c)


@pytest.mark.acceptance("C5 antichain bounds: sizes <= (U+1)U/2 and <= S; three-unit antichain of 6")
def test_c5_antichain_bounds(campaign):
    runs, _ = campaign
    for g, eng, orc in runs:
        u = g.unit_count
        for lst in eng.labels:
            assert len(lst) <= antichain_bound(u)
            assert len(lst) <= label_bound(u)
        assert eng.stats.popped <= g.vertex_count * label_bound(u)
    antichain3 = [Label(1, RI(0, 1)), Label(2, RI(1, 2)), Label(3, RI(2, 3)), Label(5, RI(0, 2)), Label(6, RI(1, 3)), Label(8, RI(0, 3))]
    for a, b in itertools.combinations(antichain3, 2):
        assert label_dominates(a, b) is Dominance.INCOMPARABLE
    dotted = [Label(4, RI(1, 2)), Label(7, RI(0, 2))]
    assert set(min_set(antichain3 + dotted)) == set(antichain3)
    assert len(antichain3) == antichain_bound(3) == 6
    assert label_bound(3) == 36


@pytest.mark.acceptance("C6 pruned vs no-prune identical on 100 instances, < 60 s")
def test_c6_mode_equivalence():
    t0 = time.perf_counter()
    for k, s in enumerate(instance_seeds(606, 100)):
        g = generate(GenSpec(1 + s % 10, (s >> 8) % 31, 1 + (s >> 16) % 4, (s >> 24) % 6, FILLS[k % 3], s))
        assert generic_dijkstra(g, 0, "pruned").label_sets() == generic_dijkstra(g, 0, "no-prune").label_sets()
    assert time.perf_counter() - t0 < 60.0


def _textbook_dijkstra(g, s):
    import heapq

    dist = {s: 0}
    heap = [(0, s)]
    done = set()
    while heap:
        d, v = heapq.heappop(heap)
        if v in done:
            continue
        done.add(v)
        for e in g.edges:
            if e.source == v and (e.target not in dist or d + e.cost < dist[e.target]):
                dist[e.target] = d + e.cost
                heapq.heappush(heap, (d + e.cost, e.target))
    return dist


@pytest.mark.acceptance("C7 full availability reduces to textbook Dijkstra on 100 instances")
def test_c7_degenerate_dijkstra():
    for s in instance_seeds(707, 100):
        g = generate(GenSpec(1 + s % 20, (s >> 8) % 81, 1 + (s >> 16) % 8, (s >> 24) % 11, 1.0, s))
        dist = _textbook_dijkstra(g, 0)
        tree = generic_dijkstra(g, 0)
        for v in range(g.vertex_count):
            want = [Label(dist[v], RI(0, g.unit_count))] if v in dist else []
            assert [l.pair for l in tree[v]] == [l.pair for l in want]


@pytest.mark.acceptance("C8 solve and gen byte-identical across two runs for 20 seeds")
def test_c8_determinism(tmp_path):
    def cli(*args):
        subprocess.run([sys.executable, "-m", "gendijkstra", *map(str, args)], check=True, capture_output=True)

    for seed in range(20):
        outs = []
        for run in range(2):
            gpath = tmp_path / f"g{seed}_{run}.json"
            rpath = tmp_path / f"r{seed}_{run}.json"
            cli("gen", "--seed", seed, "--vertices", 12, "--edges", 40, "--units", 6, "--output", gpath)
            cli("solve", "--graph", gpath, "--source", 0, "--output", rpath)
            outs.append((gpath.read_bytes(), rpath.read_bytes()))
        assert outs[0] == outs[1]
