"""Local-ratio weight machinery.

Weight maps are plain dicts vertex -> nonnegative int.  The four update
rules below are the bookkeeping the solvers use when they charge part of a
vertex's weight against a structure (a cycle, a triangle, a discarded
light set); all of them return fresh dicts and reject any input that
would produce a negative weight.

Naming convention for the rules:

* update1(w, q)     -- drop q from the domain and charge every survivor
                       the weight of q's heaviest member.
* update2(w, q)     -- charge the members of q their cheapest member's
                       weight; the domain is unchanged and at least one
                       member of q drops to zero.
* update3(w, q, s)  -- like update1, but only survivors inside the
                       terminal set s are charged.
* update4(w, q)     -- the terminal-set twin of update2 (same contract).
"""
from __future__ import annotations

from typing import Iterable

WeightMap = dict[int, int]


def _as_set(q: Iterable[int]) -> set[int]:
    qs = set(q)
    if not qs:
        raise ValueError("update set must be nonempty")
    return qs


def heaviest(w: WeightMap, q: Iterable[int]) -> int:
    """The heaviest vertex of q under w; lowest id wins ties."""
    return max(_as_set(q), key=lambda v: (w[v], -v))


def lightest(w: WeightMap, q: Iterable[int]) -> int:
    """The lightest vertex of q under w; lowest id wins ties."""
    return min(_as_set(q), key=lambda v: (w[v], v))


def _check_domain(w: WeightMap, qs: set[int]) -> None:
    missing = qs - w.keys()
    if missing:
        raise ValueError(f"vertices {sorted(missing)} are outside the weight domain")


def update1(w: WeightMap, q: Iterable[int]) -> WeightMap:
    """Remove q from the domain; subtract q's max weight from every survivor.

    The caller must guarantee that no survivor is lighter than q's heaviest
    member (q is a set of globally lightest vertices); a violation raises.
    """
    qs = _as_set(q)
    _check_domain(w, qs)
    wh = w[heaviest(w, qs)]
    out: WeightMap = {}
    for v, wv in w.items():
        if v in qs:
            continue
        nv = wv - wh
        if nv < 0:
            raise ValueError(f"vertex {v} is lighter than the removed set")
        out[v] = nv
    return out


def update2(w: WeightMap, q: Iterable[int]) -> WeightMap:
    """Subtract q's min weight from every member of q; domain unchanged."""
    qs = _as_set(q)
    _check_domain(w, qs)
    wl = w[lightest(w, qs)]
    return {v: (wv - wl if v in qs else wv) for v, wv in w.items()}


def update3(w: WeightMap, q: Iterable[int], s: Iterable[int]) -> WeightMap:
    """Remove q from the domain; subtract q's max weight from survivors in s only."""
    qs = _as_set(q)
    ss = set(s)
    if not qs <= ss:
        raise ValueError("q must be a subset of the terminal set")
    _check_domain(w, ss)
    wh = w[heaviest(w, qs)]
    out: WeightMap = {}
    for v, wv in w.items():
        if v in qs:
            continue
        if v in ss:
            nv = wv - wh
            if nv < 0:
                raise ValueError(f"terminal {v} is lighter than the removed set")
            out[v] = nv
        else:
            out[v] = wv
    return out


def update4(w: WeightMap, q: Iterable[int]) -> WeightMap:
    """Identical rule to update2; kept as its own name for the terminal-set solver."""
    return update2(w, q)


def vertex_cover_2approx(edges: Iterable[tuple[int, int]], w: WeightMap) -> set[int]:
    """Local-ratio 2-approximate weighted vertex cover.

    Edges are undirected pairs; every endpoint must be in w's domain.
    Processing order is ascending (min, max) endpoint pairs: while both
    endpoints have positive residual weight, both pay the smaller residual.
    Vertices whose residual reaches zero form the cover; a final prune in
    reverse collection order drops members the cover does not need.
    """
    norm: set[tuple[int, int]] = set()
    endpoints: set[int] = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop edge at {u}")
        if u not in w or v not in w:
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside the weight domain")
        norm.add((u, v) if u < v else (v, u))
        endpoints.add(u)
        endpoints.add(v)
    order = sorted(norm)
    residual = {v: w[v] for v in endpoints}
    picked = [v for v in sorted(endpoints) if residual[v] == 0]
    for u, v in order:
        ru, rv = residual[u], residual[v]
        if ru == 0 or rv == 0:
            continue
        d = min(ru, rv)
        residual[u] = ru - d
        residual[v] = rv - d
        if residual[u] == 0:
            picked.append(u)
        if residual[v] == 0:
            picked.append(v)
    cover = set(picked)
    for v in reversed(picked):
        trial = cover - {v}
        if all(u in trial or x in trial for u, x in order):
            cover = trial
    return cover
