"""End-to-end acceptance checks.

One test per numbered criterion, in order, so a verbose run shows exactly
one pass/fail line for each.  Every test also prints a summary line with
the measured quantity (visible with -s or on failure).  Mixes and sizes
are fixed so the whole file stays deterministic run to run.
"""
import time

import pytest

from fvs_toolkit import (
    GenSpec,
    SfvsInstance,
    derive_seed,
    exact_fvs,
    exact_sfvs,
    exact_vertex_cover,
    find_fvs,
    find_sfvs,
    gen_alpha_bounded,
    gen_instance,
    gen_tournament,
    high_inout_vertex,
    hl_degree_ordering,
    independence_number_exact,
    local_ratio_fvs_baseline,
    local_ratio_sfvs_baseline,
    shortest_cycle_in_induced,
    shortest_cycle_through,
    triangle_through,
    update1,
    update2,
    update3,
    update4,
    vertex_cover_2approx,
)
from fvs_toolkit.bench import THREADS_ENV
from fvs_toolkit.cli import main as cli_main
from fvs_toolkit.graphs import WeightedDigraph
from fvs_toolkit.rng import SplitMix64

from oracles import is_fvs, is_sfvs

WMAXES = (0, 1, 3, 10)


def _verdict(num, ok, detail):
    print(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} - {detail}")


# ---------------------------------------------------------------- criterion 1

def _validity_runs():
    """Mixed workload: (tag, graph, terminals-or-None, alpha, run seed)."""
    runs = []
    for i in range(560):  # alpha 1, n sweeps 4..20, weights rotate
        n = 4 + i % 17
        g, _ = gen_instance(GenSpec(n=n, alpha=1, weight_max=WMAXES[i % 4],
                                    seed=derive_seed(41, i)))
        runs.append(("a1", g, None, 1, derive_seed(42, i)))
    for j, n in enumerate(range(21, 51)):  # alpha 1, every size 21..50 once
        g = gen_tournament(n, derive_seed(43, j))
        runs.append(("a1L", g, None, 1, derive_seed(44, j)))
    for i in range(200):  # alpha 2, n 4..16, some digons
        n = 4 + i % 13
        g, _ = gen_instance(GenSpec(n=n, alpha=2,
                                    cross_arc_prob=0.5 if i % 2 else 0.6,
                                    digon_allowed=(i % 3 == 0),
                                    weight_max=WMAXES[i % 4],
                                    seed=derive_seed(45, i)))
        runs.append(("a2", g, None, 2, derive_seed(46, i)))
    for j, n in enumerate((18, 20, 22, 24, 26)):  # alpha 2, larger and denser
        g, _ = gen_instance(GenSpec(n=n, alpha=2, cross_arc_prob=0.6,
                                    weight_max=3, seed=derive_seed(47, j)))
        runs.append(("a2L", g, None, 2, derive_seed(48, j)))
    for i in range(100):  # alpha 3, n 4..12
        n = 4 + i % 9
        g, _ = gen_instance(GenSpec(n=n, alpha=3,
                                    cross_arc_prob=0.5 if i % 2 else 0.6,
                                    digon_allowed=(i % 4 == 0),
                                    weight_max=WMAXES[i % 4],
                                    seed=derive_seed(49, i)))
        runs.append(("a3", g, None, 3, derive_seed(50, i)))
    for j, n in enumerate((14, 16)):  # alpha 3, larger; denser keeps these fast
        g, _ = gen_instance(GenSpec(n=n, alpha=3, cross_arc_prob=0.6,
                                    weight_max=3, seed=derive_seed(51, j)))
        runs.append(("a3L", g, None, 3, derive_seed(52, j)))
    for i in range(120):  # terminal variant, n 4..30, fraction rotates
        n = 4 + i % 27
        g, terms = gen_instance(GenSpec(n=n, alpha=1, weight_max=WMAXES[i % 4],
                                        terminal_fraction=(0.3, 0.5, 0.8)[i % 3],
                                        seed=derive_seed(53, i)))
        runs.append(("sf", g, terms, None, derive_seed(54, i)))
    for j, n in enumerate((40, 50)):
        g, terms = gen_instance(GenSpec(n=n, alpha=1, weight_max=3,
                                        terminal_fraction=0.5,
                                        seed=derive_seed(55, j)))
        runs.append(("sfL", g, terms, None, derive_seed(56, j)))
    return runs


def test_c01_bulk_validity():
    runs = _validity_runs()
    assert len(runs) >= 1000
    t0 = time.perf_counter()
    invalid = []
    cross_checked = 0
    for tag, g, terms, alpha, seed in runs:
        if terms is None:
            sol = find_fvs(g, alpha, seed=seed)
        else:
            sol = find_sfvs(SfvsInstance(g, terms), seed=seed)
        if not sol.valid:
            invalid.append((tag, g.n, seed))
            continue
        if g.n <= 12:  # independent recheck on the oracle-sized instances
            arcs = list(g.arcs())
            if terms is None:
                assert is_fvs(g.n, arcs, sol.vertices), (tag, g.n, seed)
            else:
                assert is_sfvs(g.n, arcs, terms, sol.vertices), (tag, g.n, seed)
            cross_checked += 1
    elapsed = time.perf_counter() - t0
    ok = not invalid and elapsed < 300.0
    _verdict(1, ok, f"{len(runs) - len(invalid)}/{len(runs)} runs valid "
                    f"({cross_checked} oracle-rechecked) in {elapsed:.1f}s")
    assert not invalid, invalid[:5]
    assert elapsed < 300.0, f"validity sweep took {elapsed:.1f}s"


# ------------------------------------------------------- criteria 2 and 3

@pytest.fixture(scope="module")
def ratio_suite():
    """200 oracle-checkable instances: (kind, instance, alpha, exact weight)."""
    entries = []
    for i in range(100):
        n = 5 + i % 8
        fam = i % 4
        if fam == 0:
            g, alpha = gen_tournament(n, derive_seed(21, i)), 1
        elif fam == 1:
            g, _ = gen_instance(GenSpec(n=n, alpha=1, weight_max=4,
                                        seed=derive_seed(21, i)))
            alpha = 1
        elif fam == 2:
            g, _ = gen_instance(GenSpec(n=n, alpha=2, cross_arc_prob=0.5,
                                        weight_max=4, seed=derive_seed(21, i)))
            alpha = 2
        else:
            g, _ = gen_instance(GenSpec(n=n, alpha=2, cross_arc_prob=0.35,
                                        digon_allowed=True, weight_max=3,
                                        seed=derive_seed(21, i)))
            alpha = 2
        entries.append(("fvs", g, alpha, exact_fvs(g).weight))
    for i in range(100):
        n = 6 + i % 7
        g, terms = gen_instance(GenSpec(n=n, alpha=1, weight_max=(1, 4)[i % 2],
                                        terminal_fraction=0.5,
                                        seed=derive_seed(22, i)))
        inst = SfvsInstance(g, terms)
        entries.append(("sfvs", inst, 1, exact_sfvs(inst).weight))
    return entries


def test_c02_randomized_ratio_vs_exact(ratio_suite):
    hit = {"fvs": 0, "sfvs": 0}
    total = {"fvs": 0, "sfvs": 0}
    for i, (kind, obj, alpha, opt) in enumerate(ratio_suite):
        if kind == "fvs":
            sol = find_fvs(obj, alpha, seed=derive_seed(91, i))
            bound = 2 * alpha * opt
        else:
            sol = find_sfvs(obj, seed=derive_seed(92, i))
            bound = 2 * opt
        total[kind] += 1
        if sol.weight <= bound:
            hit[kind] += 1
    frac = {k: hit[k] / total[k] for k in hit}
    ok = frac["fvs"] >= 0.5 and frac["sfvs"] >= 0.5
    _verdict(2, ok, f"within guarantee: fvs {hit['fvs']}/{total['fvs']}, "
                    f"sfvs {hit['sfvs']}/{total['sfvs']} (threshold 0.5 each)")
    assert frac["fvs"] >= 0.5, frac
    assert frac["sfvs"] >= 0.5, frac


def test_c03_baseline_ratio_bounds(ratio_suite):
    exceptions = []
    for i, (kind, obj, alpha, opt) in enumerate(ratio_suite):
        if kind == "fvs":
            got = local_ratio_fvs_baseline(obj).weight
            bound = (2 * alpha + 1) * opt
        else:
            got = local_ratio_sfvs_baseline(obj).weight
            bound = 3 * opt
        if got > bound:
            exceptions.append((i, kind, got, opt))
    ok = not exceptions
    _verdict(3, ok, f"{len(ratio_suite)} baseline runs, "
                    f"{len(exceptions)} ratio exceptions")
    assert not exceptions, exceptions[:5]


# ---------------------------------------------------------------- criterion 4

def test_c04_vertex_cover_ratio():
    exceptions = []
    for i in range(200):
        rng = SplitMix64(derive_seed(4, i))
        pts = 4 + i % 11  # at most 14 endpoints
        want = pts + i % 6
        edges = set()
        for _ in range(200):
            if len(edges) >= want:
                break
            u, v = rng.below(pts), rng.below(pts)
            if u != v:
                edges.add((min(u, v), max(u, v)))
        w = {v: rng.below(6) for v in range(pts)}
        cover = vertex_cover_2approx(edges, w)
        assert all(u in cover or v in cover for u, v in edges)
        got = sum(w[v] for v in cover)
        opt = sum(w[v] for v in exact_vertex_cover(edges, w))
        if got > 2 * opt:
            exceptions.append((i, got, opt))
    ok = not exceptions
    _verdict(4, ok, f"200 edge sets, {len(exceptions)} cover-ratio exceptions")
    assert not exceptions, exceptions[:5]


# ---------------------------------------------------------------- criterion 5

def test_c05_degree_lower_bounds():
    checked = 0
    for i in range(500):
        alpha = 1 + i % 3
        n = 4 + (i * 7) % 37  # 4..40
        g = gen_alpha_bounded(GenSpec(n=n, alpha=alpha,
                                      cross_arc_prob=(0.0, 0.25, 0.5, 0.9)[i % 4],
                                      digon_allowed=(i % 4 == 0),
                                      seed=derive_seed(5, i)))
        x = high_inout_vertex(g)
        d = min(g.out_degree(x), g.in_degree(x))
        assert 4 * alpha * d >= n - 2 * alpha, (i, n, alpha, x, d)
        order = hl_degree_ordering(g)
        assert sorted(order) == list(range(n))
        out_adj = [set(g.out_neighbors(v)) for v in range(n)]
        in_adj = [set(g.in_neighbors(v)) for v in range(n)]
        alive = set(range(n))
        for k, v in enumerate(order):
            m = n - k
            dv = min(len(out_adj[v] & alive), len(in_adj[v] & alive))
            assert 4 * alpha * dv >= m - 2 * alpha, (i, n, alpha, k, v)
            alive.remove(v)
        checked += 1
    _verdict(5, checked == 500,
             f"{checked}/500 graphs pass pivot and full-ordering degree bounds")
    assert checked == 500


# ---------------------------------------------------------------- criterion 6

def _ring_with_back_chords(n, seed, p):
    # directed ring through vertex 0 plus random back chords among 1..n-1;
    # chords lower the independence number without shortening cycles via 0
    rng = SplitMix64(derive_seed(seed, 77))
    arcs = [(i, (i + 1) % n) for i in range(n)]
    for u in range(2, n):
        for v in range(1, u):
            if u != v + 1 and rng.chance(p):
                arcs.append((u, v))
    return WeightedDigraph(n, arcs)


def test_c06_short_induced_cycle():
    graphs = []
    for i in range(20):
        graphs.append(gen_tournament(5 + i % 6, derive_seed(61, i)))
    for i in range(20):
        graphs.append(gen_alpha_bounded(GenSpec(
            n=8 + i % 4, alpha=2, cross_arc_prob=(0.15, 0.3)[i % 2],
            seed=derive_seed(62, i))))
    for i in range(20):
        graphs.append(gen_alpha_bounded(GenSpec(
            n=9 + i % 4, alpha=3, cross_arc_prob=0.2,
            digon_allowed=bool(i % 2), seed=derive_seed(63, i))))
    for i in range(40):
        graphs.append(_ring_with_back_chords(7 + i % 4, derive_seed(64, i), 0.7))
    assert len(graphs) == 100
    checks = triggers = 0
    violations = []
    for gi, g in enumerate(graphs):
        a = independence_number_exact(g)
        for x in range(g.n):
            c = shortest_cycle_through(g, x)
            if c is None:
                continue
            checks += 1
            if len(c) <= 2 * a + 1:
                continue
            triggers += 1
            c2 = shortest_cycle_in_induced(g, c)
            if x in tuple(c2) or len(c2) > 2 * a:
                violations.append((gi, x, tuple(c), tuple(c2)))
    ok = not violations and triggers > 0
    _verdict(6, ok, f"{checks} shortest cycles on 100 graphs, "
                    f"{triggers} long-cycle cases, {len(violations)} violations")
    assert not violations, violations[:5]
    assert triggers > 0  # the interesting branch must actually be exercised


# ---------------------------------------------------------------- criterion 7

def test_c07_tournament_triangle_shortcut():
    checked = 0
    for i in range(200):
        n = 3 + i % 10
        g = gen_tournament(n, derive_seed(7, i))
        for x in range(n):
            tri = triangle_through(g, x)
            cyc = shortest_cycle_through(g, x)
            assert (tri is None) == (cyc is None), (i, x)
            if tri is not None:
                assert len(tri) == 3 and tri.is_cycle_of(g)
                assert len(cyc) == 3
        checked += 1
    _verdict(7, checked == 200,
             f"{checked}/200 tournaments: cycle-through == triangle-through")
    assert checked == 200


# ---------------------------------------------------------------- criterion 8

def test_c08_weight_update_algebra():
    rng = SplitMix64(derive_seed(8, 1))
    checked = 0
    for i in range(1000):
        n = 3 + i % 10
        w = {v: rng.below(13) for v in range(n)}
        ids = list(range(n))
        rng.shuffle(ids)
        f = frozenset(ids[:rng.below(n + 1)])
        kind = i % 4
        if kind in (0, 1):  # same rule under both names
            rng.shuffle(ids)
            q = frozenset(ids[:1 + rng.below(min(4, n))])
            wq = update2(w, q) if kind == 0 else update4(w, q)
            low = min(w[v] for v in q)
            assert set(wq) == set(w)
            assert all(x >= 0 for x in wq.values())
            argmin = min(q, key=lambda v: (w[v], v))
            assert wq[argmin] == 0
            assert all(wq[v] == w[v] - (low if v in q else 0) for v in w)
            lhs = sum(w[v] for v in f)
            assert lhs == sum(wq[v] for v in f) + len(f & q) * low
        elif kind == 2:  # drop a globally lightest set, charge all survivors
            k = 1 + rng.below(min(4, n - 1))
            q = frozenset(sorted(range(n), key=lambda v: (w[v], v))[:k])
            w1 = update1(w, q)
            high = max(w[v] for v in q)
            assert set(w1) == set(w) - q
            assert all(x >= 0 for x in w1.values())
            assert all(w1[v] == w[v] - high for v in w1)
            fs = f - q
            assert sum(w[v] for v in fs) == sum(w1[v] for v in fs) + len(fs) * high
        else:  # drop the lightest terminals, charge the remaining terminals
            rng.shuffle(ids)
            s = frozenset(ids[:2 + rng.below(n - 1)])
            k = 1 + rng.below(min(3, len(s)))
            q = frozenset(sorted(s, key=lambda v: (w[v], v))[:k])
            w3 = update3(w, q, s)
            high = max(w[v] for v in q)
            assert set(w3) == set(w) - q
            assert all(x >= 0 for x in w3.values())
            assert all(w3[v] == w[v] - (high if v in s else 0) for v in w3)
            fs = f - q
            charged = len(fs & s)
            assert sum(w[v] for v in fs) == sum(w3[v] for v in fs) + charged * high
        checked += 1
    _verdict(8, checked == 1000, f"{checked}/1000 update triples verified")
    assert checked == 1000


# ---------------------------------------------------------------- criterion 9

def _strip_times(text):
    return [line.rsplit(",", 1)[0] for line in text.strip().splitlines()]


def test_c09_reproducibility(tmp_path, monkeypatch, capsys):
    dir_a, dir_b = tmp_path / "a", tmp_path / "b"
    dir_a.mkdir()
    dir_b.mkdir()
    gen_args = ["gen", "--n", "9", "--alpha", "2", "--terminal-fraction", "0.4",
                "--weight-max", "5", "--seed", "123", "--count", "3", "--out"]
    assert cli_main(gen_args + [str(dir_a)]) == 0
    assert cli_main(gen_args + [str(dir_b)]) == 0
    names = sorted(p.name for p in dir_a.iterdir())
    assert names == sorted(p.name for p in dir_b.iterdir())
    assert len(names) == 3
    same_files = all((dir_a / nm).read_bytes() == (dir_b / nm).read_bytes()
                     for nm in names)

    cfg = tmp_path / "bench.cfg"
    cfg.write_text("problem = fvs\ncount = 3\nn_min = 6\nn_max = 9\n"
                   "alpha = 2\nseeds = 2\nbase_seed = 5\n")
    csvs = [tmp_path / f"r{k}.csv" for k in range(3)]
    assert cli_main(["bench", str(cfg), "--out", str(csvs[0])]) == 0
    assert cli_main(["bench", str(cfg), "--out", str(csvs[1])]) == 0
    monkeypatch.setenv(THREADS_ENV, "3")
    assert cli_main(["bench", str(cfg), "--out", str(csvs[2])]) == 0
    capsys.readouterr()
    texts = [p.read_text() for p in csvs]
    assert texts[0].splitlines()[0].endswith(",time_us")
    same_csv = _strip_times(texts[0]) == _strip_times(texts[1]) == _strip_times(texts[2])
    ok = same_files and same_csv
    _verdict(9, ok, f"3 instance files byte-identical: {same_files}; "
                    f"CSV identical minus wall time (incl. threaded): {same_csv}")
    assert same_files
    assert same_csv


# --------------------------------------------------------------- criterion 10

def test_c10_large_terminal_instance_smoke():
    g, terms = gen_instance(GenSpec(n=200, alpha=1, weight_max=10,
                                    terminal_fraction=0.5, seed=424242))
    assert len(terms) == 100
    inst = SfvsInstance(g, terms)
    t0 = time.perf_counter()
    sol = find_sfvs(inst, seed=7)
    elapsed = time.perf_counter() - t0
    ok = sol.valid and elapsed < 10.0
    _verdict(10, ok, f"n=200, 100 terminals solved in {elapsed:.2f}s "
                     f"(budget 10s), valid={sol.valid}")
    assert sol.valid
    assert elapsed < 10.0, f"took {elapsed:.2f}s"
