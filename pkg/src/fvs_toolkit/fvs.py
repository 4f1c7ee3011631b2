"""Feedback vertex set in digraphs of bounded independence number.

``find_fvs`` targets digraphs whose independence number is at most a known
alpha (alpha = 1 is exactly the tournaments).  Such graphs are dense
enough that short induced cycles always exist, which drives both solvers
here:

* Recursive case: a light branch (discard the cheapest ceil(n / 6*alpha)
  vertices, recurse on the rest) competes with a batch of random pivot
  trials.  A trial draws a vertex x, requires min(out, in) degree above
  the profile threshold, destroys every cycle through x by local-ratio
  peeling of short induced cycles (``eliminate_cycles_through``), and
  recurses independently on the two sides of the reachability split at x.
  The lightest candidate under the call's weights wins, first on ties.
* Base case: an exact solve once few enough vertices remain.

Feasibility of the returned set is unconditional and rechecked before
returning.  The paper profile additionally makes the result a
2*alpha-approximation with probability at least 1/2; the desk profile
keeps the structure but not that guarantee.
"""
from __future__ import annotations

from .config import AlgoConfig, desk_profile
from .exact import _min_weight_fvs
from .graphs import (
    WeightedDigraph,
    _acyclic_masked,
    _bits,
    _girth_cycle_masked,
    _reachable_masked,
    _shortest_cycle_masked,
)
from .local_ratio import WeightMap, update1, update2
from .rng import SplitMix64, derive_seed
from .solution import Solution


def _degree_too_small(n: int, alpha: int, d: int) -> bool:
    # d < n/(18*alpha) + 1/(4*alpha) - 1/2, cleared of denominators
    return 36 * alpha * d < 2 * n + 9 - 18 * alpha


def eliminate_cycles_through(
    g: WeightedDigraph, w: WeightMap, x: int
) -> tuple[set[int], WeightMap]:
    """Delete vertices until no cycle runs through x.

    Each round takes the shortest cycle C through x, then the shortest
    induced cycle C' inside C (which either is short or misses x), charges
    C' minus x its minimum weight (update2), and removes the vertex that
    reached the minimum (lowest id on ties).  x itself is never removed.
    Returns the removed set and the updated weights.
    """
    g._check_vertex(x)
    out, inb = g.out_bits, g.in_bits
    alive = (1 << g.n) - 1
    wi = dict(w)
    removed: set[int] = set()
    while True:
        seq = _shortest_cycle_masked(out, inb, x, alive)
        if seq is None:
            break
        cmask = 0
        for v in seq:
            cmask |= 1 << v
        core = _girth_cycle_masked(out, inb, cmask)
        q = [v for v in core if v != x]
        v = min(q, key=lambda u: (wi[u], u))
        wi = update2(wi, q)
        removed.add(v)
        alive &= ~(1 << v)
    return removed, wi


def _solve(
    g: WeightedDigraph,
    w: WeightMap,
    alpha: int,
    cfg: AlgoConfig,
    seed: int,
    depth: int,
) -> frozenset[int]:
    n = g.n
    out, inb = g.out_bits, g.in_bits
    full = (1 << n) - 1
    if _acyclic_masked(out, inb, full):
        return frozenset()  # nothing to do: the empty set is optimal
    if n <= cfg.base_case_n:
        return _min_weight_fvs(out, inb, [w[v] for v in range(n)], n)
    candidates: list[set[int] | frozenset[int]] = []
    # Light branch: drop the cheapest ceil(n / light_den) vertices
    # outright, charge the survivors, recurse on what is left.
    k = min(max(1, -(-n // cfg.light_den)), n - 1)
    light = set(sorted(range(n), key=lambda v: (w[v], v))[:k])
    w1 = update1(w, light)
    sub = g.induced(v for v in range(n) if v not in light)
    ids = sub.parent_ids
    wsub = {i: w1[ids[i]] for i in range(sub.n)}
    f = _solve(sub, wsub, alpha, cfg, derive_seed(seed, depth, 0, 1), depth + 1)
    candidates.append(light | {ids[i] for i in f})
    # Random pivot trials.
    for trial in range(1, cfg.repetitions + 1):
        stream = SplitMix64(derive_seed(seed, depth, trial, 0))
        x = stream.below(n)
        d = min(out[x].bit_count(), inb[x].bit_count())
        if _degree_too_small(n, alpha, d):
            # x splits the graph too unevenly to help; fall back to the
            # trivial candidate.
            candidates.append(set(range(n)))
            continue
        removed, wi = eliminate_cycles_through(g, w, x)
        alive = full
        for v in removed:
            alive &= ~(1 << v)
        seen = _reachable_masked(out, x, alive)
        fi = set(removed)
        for slot, side in ((1, seen & ~(1 << x)), (2, alive & ~seen)):
            ssub = g.induced(_bits(side))
            sids = ssub.parent_ids
            swsub = {i: wi[sids[i]] for i in range(ssub.n)}
            fs = _solve(ssub, swsub, alpha, cfg,
                        derive_seed(seed, depth, trial, slot), depth + 1)
            fi |= {sids[i] for i in fs}
        candidates.append(fi)
    best = None
    best_w = None
    for cand in candidates:
        cw = sum(w[v] for v in cand)
        if best is None or cw < best_w:
            best, best_w = cand, cw
    return frozenset(best)


def find_fvs(
    g: WeightedDigraph, alpha: int, cfg: AlgoConfig | None = None, seed: int = 0
) -> Solution:
    """Randomized divide-and-conquer feedback vertex set.

    alpha must upper-bound the independence number of g.  The returned set
    always leaves g acyclic (rechecked before returning); with the paper
    profile it is additionally a 2*alpha-approximation with probability at
    least 1/2.
    """
    if not isinstance(alpha, int) or isinstance(alpha, bool) or alpha < 1:
        raise ValueError("alpha must be a positive integer")
    if cfg is None:
        cfg = desk_profile(alpha)
    w = {v: g.weights[v] for v in range(g.n)}
    f = _solve(g, w, alpha, cfg, seed, 0)
    weight = sum(g.weights[v] for v in f)
    fmask = 0
    for v in f:
        fmask |= 1 << v
    valid = _acyclic_masked(g.out_bits, g.in_bits, ((1 << g.n) - 1) & ~fmask)
    return Solution(f, weight, "find_fvs", seed, valid)


def local_ratio_fvs_baseline(g: WeightedDigraph) -> Solution:
    """Deterministic local-ratio feedback vertex set.

    While a cycle remains, every vertex of a shortest (hence chordless)
    cycle pays the cycle's smallest residual weight and vertices at zero
    join the solution.  A reverse-delete prune drops members the solution
    does not need.  On a graph of independence number alpha, chordless
    cycles have at most 2*alpha + 1 vertices, so the result is a
    (2*alpha + 1)-approximation.
    """
    out, inb = g.out_bits, g.in_bits
    full = (1 << g.n) - 1
    residual = {v: g.weights[v] for v in range(g.n)}
    alive = full
    picked: list[int] = []
    while True:
        cyc = _girth_cycle_masked(out, inb, alive)
        if cyc is None:
            break
        d = min(residual[v] for v in cyc)
        for v in cyc:
            residual[v] -= d
        for v in sorted(cyc):
            if residual[v] == 0:
                picked.append(v)
                alive &= ~(1 << v)
    keep = set(picked)
    for v in reversed(picked):
        trial_mask = 0
        for u in keep:
            if u != v:
                trial_mask |= 1 << u
        if _acyclic_masked(out, inb, full & ~trial_mask):
            keep.discard(v)
    weight = sum(g.weights[v] for v in keep)
    fmask = 0
    for v in keep:
        fmask |= 1 << v
    valid = _acyclic_masked(out, inb, full & ~fmask)
    return Solution(frozenset(keep), weight, "lr_fvs", None, valid)
