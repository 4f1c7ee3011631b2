"""Exact minimum-weight solvers, used as ground truth on small instances.

All three solvers share the same canonical tie-break: among optima they
return the one minimizing (weight, cardinality, lexicographic vertex
tuple).  Preferring smaller cardinality before the lexicographic compare
matters when zero-weight vertices exist, since otherwise a padded optimum
could beat every inclusion-minimal one.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .graphs import (
    ExactLimitError,
    WeightedDigraph,
    _acyclic_masked,
    _bits,
    _girth_cycle_masked,
    _s_triangle_masked,
)
from .sfvs import SfvsInstance, _terminal_mask
from .solution import Solution

EXACT_LIMIT_DEFAULT = 15
COVER_LIMIT_DEFAULT = 20
_DP_CUTOFF = 18


def _key_of(mask: int, weights: Sequence[int]) -> tuple[int, int, tuple[int, ...]]:
    vs = tuple(_bits(mask))
    return (sum(weights[v] for v in vs), len(vs), vs)


def _min_weight_fvs_dp(out: list[int], weights: Sequence[int], n: int) -> frozenset[int]:
    """Sweep all vertex subsets; keep the best complement of an acyclic one.

    A subset induces a DAG iff it has a sink whose removal leaves a DAG,
    so one ascending pass over masks settles every subset in O(2^n * n).
    """
    full = (1 << n) - 1
    is_dag = bytearray(full + 1)
    is_dag[0] = 1
    wsum = [0] * (full + 1)
    total = sum(weights)
    best_mask = 0
    best_key = (total, n)
    best_tuple: tuple[int, ...] | None = None
    for mask in range(1, full + 1):
        low = mask & -mask
        wsum[mask] = wsum[mask ^ low] + weights[low.bit_length() - 1]
        m = mask
        ok = 0
        while m:
            b = m & -m
            if not out[b.bit_length() - 1] & mask:
                ok = is_dag[mask ^ b]
                break
            m ^= b
        if not ok:
            continue
        is_dag[mask] = 1
        key = (total - wsum[mask], n - mask.bit_count())
        if key < best_key:
            best_key = key
            best_mask = mask
            best_tuple = None
        elif key == best_key:
            if best_tuple is None:
                best_tuple = tuple(_bits(full ^ best_mask))
            cand = tuple(_bits(full ^ mask))
            if cand < best_tuple:
                best_mask = mask
                best_tuple = cand
    return frozenset(_bits(full ^ best_mask))


def _min_weight_fvs_branch(
    out: list[int], inb: list[int], weights: Sequence[int], n: int
) -> frozenset[int]:
    """Memoized branching on a shortest cycle; used above the DP cutoff."""
    full = (1 << n) - 1
    seen: set[int] = set()
    best: list = [None]

    def rec(removed: int, cost: int) -> None:
        if removed in seen:
            return
        seen.add(removed)
        if best[0] is not None and cost > best[0][0]:
            return
        cyc = _girth_cycle_masked(out, inb, full & ~removed)
        if cyc is None:
            key = (cost, removed.bit_count(), tuple(_bits(removed)))
            if best[0] is None or key < best[0]:
                best[0] = key
            return
        for v in sorted(cyc):
            rec(removed | (1 << v), cost + weights[v])

    rec(0, 0)
    return frozenset(best[0][2])


def _min_weight_fvs(
    out: list[int], inb: list[int], weights: Sequence[int], n: int
) -> frozenset[int]:
    if n <= _DP_CUTOFF:
        return _min_weight_fvs_dp(out, weights, n)
    return _min_weight_fvs_branch(out, inb, weights, n)


def exact_fvs(g: WeightedDigraph, limit: int = EXACT_LIMIT_DEFAULT) -> Solution:
    """Exact minimum-weight feedback vertex set (small graphs only)."""
    if g.n > limit:
        raise ExactLimitError(f"graph has {g.n} > {limit} vertices")
    f = _min_weight_fvs(g.out_bits, g.in_bits, g.weights, g.n)
    fmask = _terminal_mask(f)
    weight = sum(g.weights[v] for v in f)
    valid = _acyclic_masked(g.out_bits, g.in_bits, ((1 << g.n) - 1) & ~fmask)
    return Solution(f, weight, "exact_fvs", None, valid)


def exact_sfvs(inst: SfvsInstance, limit: int = EXACT_LIMIT_DEFAULT) -> Solution:
    """Exact minimum-weight subset feedback vertex set in a tournament.

    Branches on triangles through surviving terminals, which is complete
    because a cycle through a terminal exists iff such a triangle does.
    """
    t = inst.t
    if t.n > limit:
        raise ExactLimitError(f"tournament has {t.n} > {limit} vertices")
    out, inb = t.out_bits, t.in_bits
    full = (1 << t.n) - 1
    smask = _terminal_mask(inst.terminals)
    w = inst.w
    seen: set[int] = set()
    best: list = [None]

    def rec(removed: int, cost: int) -> None:
        if removed in seen:
            return
        seen.add(removed)
        if best[0] is not None and cost > best[0][0]:
            return
        tri = _s_triangle_masked(out, inb, smask, full & ~removed)
        if tri is None:
            key = (cost, removed.bit_count(), tuple(_bits(removed)))
            if best[0] is None or key < best[0]:
                best[0] = key
            return
        for v in sorted(tri):
            rec(removed | (1 << v), cost + w[v])

    rec(0, 0)
    f = frozenset(best[0][2])
    weight = sum(w[v] for v in f)
    valid = _s_triangle_masked(out, inb, smask, full & ~_terminal_mask(f)) is None
    return Solution(f, weight, "exact_sfvs", None, valid)


def exact_vertex_cover(
    edges: Iterable[tuple[int, int]],
    w: dict[int, int],
    limit: int = COVER_LIMIT_DEFAULT,
) -> set[int]:
    """Exact minimum-weight vertex cover by branching on uncovered edges."""
    norm: set[tuple[int, int]] = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop edge at {u}")
        if u not in w or v not in w:
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside the weight domain")
        norm.add((u, v) if u < v else (v, u))
    endpoints = sorted({v for e in norm for v in e})
    if len(endpoints) > limit:
        raise ExactLimitError(f"edge set touches {len(endpoints)} > {limit} vertices")
    idx = {v: i for i, v in enumerate(endpoints)}
    edge_list = sorted(norm)
    seen: set[int] = set()
    best: list = [None]

    def rec(cover: int, cost: int) -> None:
        if cover in seen:
            return
        seen.add(cover)
        if best[0] is not None and cost > best[0][0]:
            return
        open_edge = None
        for u, v in edge_list:
            if not ((cover >> idx[u]) | (cover >> idx[v])) & 1:
                open_edge = (u, v)
                break
        if open_edge is None:
            vs = tuple(endpoints[i] for i in _bits(cover))
            key = (cost, len(vs), vs)
            if best[0] is None or key < best[0]:
                best[0] = key
            return
        for v in open_edge:
            rec(cover | (1 << idx[v]), cost + w[v])

    rec(0, 0)
    if best[0] is None:
        return set()
    return set(best[0][2])
