"""Subset feedback vertex set in tournaments.

``find_sfvs`` removes a minimum-weight-ish vertex set so that no remaining
cycle passes through a terminal.  Because a shortest cycle through any
vertex of a tournament is a triangle, every step reduces to triangle
bookkeeping:

* Base case (few terminals): for every small terminal subset Q, commit to
  deleting Q, peel the outside vertices that still form triangles with two
  surviving terminals, and cover the remaining one-terminal triangles with
  a 2-approximate vertex cover (``base_case_extend``).  Keep the lightest.
* Recursive case: additionally try a light-terminal branch (discard the
  cheapest sixth of the terminals, recurse on the rest) and a batch of
  random pivot trials.  A trial picks a terminal x, checks that x has
  enough in- and out-neighbors among terminals to be worth splitting on,
  eliminates every triangle through x by local-ratio peeling
  (``eliminate_triangles_through``), and recurses independently on the
  vertices reachable / unreachable from x.

All candidates compete by weight under the weights the call received; the
first lightest wins, which keeps runs reproducible per (instance, seed).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .config import AlgoConfig, desk_profile
from .graphs import (
    WeightedDigraph,
    _bits,
    _reachable_masked,
    _s_triangle_masked,
)
from .local_ratio import WeightMap, update3, update4, vertex_cover_2approx
from .rng import SplitMix64, derive_seed
from .solution import Solution


@dataclass(frozen=True)
class SfvsInstance:
    """A tournament, a terminal set, and the weights in effect."""

    t: WeightedDigraph
    terminals: frozenset[int]
    w: dict[int, int] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if not self.t.tournament:
            raise ValueError("instance graph must be a tournament")
        terms = frozenset(self.terminals)
        for v in terms:
            self.t._check_vertex(v)
        object.__setattr__(self, "terminals", terms)
        if self.w is None:
            object.__setattr__(self, "w", self.t.weight_map())
        else:
            if set(self.w) != set(range(self.t.n)):
                raise ValueError("weight map must cover exactly the vertices of t")
            if any(wv < 0 for wv in self.w.values()):
                raise ValueError("weights must be nonnegative")

    @property
    def s(self) -> int:
        return len(self.terminals)


def _terminal_mask(terminals: Iterable[int]) -> int:
    m = 0
    for v in terminals:
        m |= 1 << v
    return m


def _sfvs_valid(t: WeightedDigraph, smask: int, fmask: int) -> bool:
    alive = ((1 << t.n) - 1) & ~fmask
    return _s_triangle_masked(t.out_bits, t.in_bits, smask, alive) is None


def eliminate_triangles_through(
    t: WeightedDigraph, w: WeightMap, x: int
) -> tuple[set[int], WeightMap]:
    """Delete vertices until no triangle (hence no cycle) runs through x.

    Each step takes the first remaining triangle x -> b -> c -> x by
    ascending (b, c), charges {b, c} their smaller weight (update4) and
    removes the vertex that hit the minimum (lowest id on ties).  x itself
    is never removed.  Returns the removed set and the updated weights.
    """
    if not t.tournament:
        raise ValueError("eliminate_triangles_through requires a tournament")
    t._check_vertex(x)
    out, inb = t.out_bits, t.in_bits
    alive = (1 << t.n) - 1
    wi = dict(w)
    removed: set[int] = set()
    dead_b = 0  # out-neighbors of x that can no longer close a triangle
    while True:
        found = None
        for b in _bits(out[x] & alive & ~dead_b):
            cm = out[b] & inb[x] & alive
            if cm:
                found = (b, (cm & -cm).bit_length() - 1)
                break
            dead_b |= 1 << b
        if found is None:
            break
        b, c = found
        v = b if (wi[b], b) <= (wi[c], c) else c
        wi = update4(wi, (b, c))
        removed.add(v)
        alive &= ~(1 << v)
    return removed, wi


def _extend(
    t: WeightedDigraph,
    smask: int,
    w: WeightMap,
    q: frozenset[int],
    cache: list[int],
) -> frozenset[int]:
    """One base-case candidate: commit to deleting the terminal subset q.

    cache holds bitmasks of terminal triangles found by earlier calls at
    the same recursion node; any cached triangle disjoint from q already
    proves the all-survivor check, which keeps the subset enumeration
    cheap.
    """
    out, inb = t.out_bits, t.in_bits
    full = (1 << t.n) - 1
    qmask = _terminal_mask(q)
    omask = smask & ~qmask
    # A triangle among the surviving terminals cannot be covered from
    # outside: give up on this q and fall back to deleting every terminal.
    for tri_mask in cache:
        if not tri_mask & qmask:
            return frozenset(_bits(smask))
    for a in _bits(omask):
        for b in _bits(out[a] & omask):
            cm = out[b] & inb[a] & omask
            if cm:
                c = (cm & -cm).bit_length() - 1
                cache.append((1 << a) | (1 << b) | (1 << c))
                return frozenset(_bits(smask))
    # Peel outsiders that form a triangle with two surviving terminals.
    alive = full & ~qmask
    removed = set(q)
    dead: dict[int, int] = {}
    while True:
        found = None
        for a in _bits(omask):
            bs = out[a] & omask & ~dead.get(a, 0)
            for b in _bits(bs):
                cm = out[b] & inb[a] & alive & ~omask
                if cm:
                    found = (cm & -cm).bit_length() - 1
                    break
                dead[a] = dead.get(a, 0) | (1 << b)
            if found is not None:
                break
        if found is None:
            break
        assert not (1 << found) & (omask | qmask)
        removed.add(found)
        alive &= ~(1 << found)
    # Remaining terminal triangles have exactly one terminal; covering the
    # outside edge of each one kills them all.
    pairs: set[tuple[int, int]] = set()
    rest = alive & ~omask
    for b in _bits(rest):
        for c in _bits(out[b] & rest):
            if inb[b] & out[c] & omask:
                pairs.add((b, c) if b < c else (c, b))
    cover = vertex_cover_2approx(pairs, w)
    return frozenset(removed | cover)


def base_case_extend(inst: SfvsInstance, q: Iterable[int]) -> set[int]:
    """Public wrapper for one base-case candidate; q must be terminals."""
    qs = frozenset(q)
    if not qs <= inst.terminals:
        raise ValueError("q must be a subset of the terminal set")
    smask = _terminal_mask(inst.terminals)
    return set(_extend(inst.t, smask, dict(inst.w), qs, []))


def _lightest(candidates: list[frozenset[int]], w: WeightMap) -> frozenset[int]:
    best = None
    best_w = None
    for cand in candidates:
        cw = sum(w[v] for v in cand)
        if best is None or cw < best_w:
            best, best_w = cand, cw
    return best


def _solve(
    t: WeightedDigraph,
    smask: int,
    w: WeightMap,
    cfg: AlgoConfig,
    seed: int,
    depth: int,
) -> frozenset[int]:
    out, inb = t.out_bits, t.in_bits
    full = (1 << t.n) - 1
    if _s_triangle_masked(out, inb, smask, full) is None:
        return frozenset()  # nothing to do: the empty set is optimal
    s_sorted = list(_bits(smask))
    s = len(s_sorted)
    candidates: list[frozenset[int]] = []
    cache: list[int] = []
    for size in range(min(cfg.sfvs_subset_cap, s) + 1):
        for qt in combinations(s_sorted, size):
            candidates.append(_extend(t, smask, w, frozenset(qt), cache))
    if s <= cfg.sfvs_base_s:
        return _lightest(candidates, w)
    # Light-terminal branch: drop the cheapest ceil(s / light_den)
    # terminals outright, charge the rest, recurse on what is left.
    k = min(max(1, -(-s // cfg.light_den)), s - 1)
    light = set(sorted(s_sorted, key=lambda v: (w[v], v))[:k])
    w3 = update3(w, light, s_sorted)
    sub = t.induced(v for v in range(t.n) if v not in light)
    ids = sub.parent_ids
    sub_smask = 0
    for i in range(sub.n):
        if (smask >> ids[i]) & 1:
            sub_smask |= 1 << i
    wsub = {i: w3[ids[i]] for i in range(sub.n)}
    f = _solve(sub, sub_smask, wsub, cfg, derive_seed(seed, depth, 0, 1), depth + 1)
    candidates.append(frozenset(light) | {ids[i] for i in f})
    # Random pivot trials.
    for trial in range(1, cfg.repetitions + 1):
        stream = SplitMix64(derive_seed(seed, depth, trial, 0))
        x = s_sorted[stream.below(s)]
        d = min((out[x] & smask).bit_count(), (inb[x] & smask).bit_count())
        if 36 * d < 2 * s + 9 - 18:
            # x splits the terminals too unevenly to help; fall back to
            # the trivial candidate.
            candidates.append(frozenset(s_sorted))
            continue
        removed, wi = eliminate_triangles_through(t, w, x)
        alive = full
        for v in removed:
            alive &= ~(1 << v)
        seen = _reachable_masked(out, x, alive)
        fi = set(removed)
        for slot, side in ((1, seen & ~(1 << x)), (2, alive & ~seen)):
            sub = t.induced(_bits(side))
            ids = sub.parent_ids
            sub_smask = 0
            for i in range(sub.n):
                if (smask >> ids[i]) & 1:
                    sub_smask |= 1 << i
            wsub = {i: wi[ids[i]] for i in range(sub.n)}
            fs = _solve(sub, sub_smask, wsub, cfg,
                        derive_seed(seed, depth, trial, slot), depth + 1)
            fi |= {ids[i] for i in fs}
        candidates.append(frozenset(fi))
    return _lightest(candidates, w)


def find_sfvs(inst: SfvsInstance, cfg: AlgoConfig | None = None, seed: int = 0) -> Solution:
    """Randomized divide-and-conquer subset feedback vertex set.

    Returns a vertex set whose removal leaves no cycle through a terminal.
    Feasibility is unconditional and rechecked before returning; with the
    paper profile the result is a 2-approximation with probability at
    least 1/2.
    """
    if cfg is None:
        cfg = desk_profile(1)
    smask = _terminal_mask(inst.terminals)
    f = _solve(inst.t, smask, dict(inst.w), cfg, seed, 0)
    weight = sum(inst.w[v] for v in f)
    fmask = _terminal_mask(f)
    valid = _sfvs_valid(inst.t, smask, fmask)
    return Solution(frozenset(f), weight, "find_sfvs", seed, valid)


def local_ratio_sfvs_baseline(inst: SfvsInstance) -> Solution:
    """Deterministic 3-approximation by local ratio on terminal triangles.

    While some triangle still contains a surviving terminal, all three of
    its vertices pay the triangle's smallest residual weight; vertices at
    zero join the solution.  A reverse-delete prune drops members the
    solution does not need.
    """
    t = inst.t
    out, inb = t.out_bits, t.in_bits
    full = (1 << t.n) - 1
    smask = _terminal_mask(inst.terminals)
    residual = dict(inst.w)
    alive = full
    picked: list[int] = []
    while True:
        tri = _s_triangle_masked(out, inb, smask, alive)
        if tri is None:
            break
        d = min(residual[v] for v in tri)
        for v in tri:
            residual[v] -= d
        for v in sorted(tri):
            if residual[v] == 0:
                picked.append(v)
                alive &= ~(1 << v)
    keep = set(picked)
    for v in reversed(picked):
        trial_mask = 0
        for u in keep:
            if u != v:
                trial_mask |= 1 << u
        if _s_triangle_masked(out, inb, smask, full & ~trial_mask) is None:
            keep.discard(v)
    weight = sum(inst.w[v] for v in keep)
    valid = _sfvs_valid(t, smask, _terminal_mask(keep))
    return Solution(frozenset(keep), weight, "lr_sfvs", None, valid)
