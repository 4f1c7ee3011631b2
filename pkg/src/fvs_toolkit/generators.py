"""Seeded instance generators.

All randomness comes from splitmix64 streams (see :mod:`fvs_toolkit.rng`),
so a given GenSpec reproduces the identical instance anywhere.  Draw order
is part of the contract: pairs are visited ascending (u, v), each
same-group pair costs one coin flip, each cross-group pair costs two
probability draws.

``gen_alpha_bounded`` guarantees independence number at most alpha
constructively: vertices are split into alpha near-equal contiguous id
blocks and every block is a random tournament internally, so any
alpha + 1 vertices contain two from one block, which are adjacent.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .graphs import WeightedDigraph
from .rng import SplitMix64, derive_seed


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generated instance."""

    n: int
    alpha: int = 1
    cross_arc_prob: float = 0.5
    digon_allowed: bool = False
    weight_max: int = 1
    terminal_fraction: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 1 <= self.alpha <= self.n:
            raise ValueError("alpha must lie in [1, n]")
        if not 0.0 <= self.cross_arc_prob <= 1.0:
            raise ValueError("cross_arc_prob must lie in [0, 1]")
        if self.weight_max < 0:
            raise ValueError("weight_max must be nonnegative")
        if not 0.0 <= self.terminal_fraction <= 1.0:
            raise ValueError("terminal_fraction must lie in [0, 1]")


def gen_tournament(n: int, seed: int) -> WeightedDigraph:
    """Random tournament: one fair coin per vertex pair, unit weights."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    stream = SplitMix64(seed)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            arcs.append((u, v) if stream.coin() else (v, u))
    return WeightedDigraph(n, arcs, tournament=True)


def _group_bounds(n: int, alpha: int) -> list[int]:
    # alpha contiguous blocks whose sizes differ by at most one
    base, rem = divmod(n, alpha)
    bounds = [0]
    for i in range(alpha):
        bounds.append(bounds[-1] + base + (1 if i < rem else 0))
    return bounds


def gen_alpha_bounded(spec: GenSpec) -> WeightedDigraph:
    """Random digraph with independence number at most spec.alpha.

    Same-block pairs get a coin-flip tournament arc.  Each ordered
    cross-block pair gets an arc with probability cross_arc_prob; when
    both directions are drawn and digons are not allowed, only the
    low-to-high arc is kept.  Weights are all one (compose with
    gen_weights for weighted instances).
    """
    n, alpha = spec.n, spec.alpha
    bounds = _group_bounds(n, alpha)
    group = [0] * n
    for i in range(alpha):
        for v in range(bounds[i], bounds[i + 1]):
            group[v] = i
    stream = SplitMix64(spec.seed)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if group[u] == group[v]:
                arcs.append((u, v) if stream.coin() else (v, u))
            else:
                fwd = stream.chance(spec.cross_arc_prob)
                bwd = stream.chance(spec.cross_arc_prob)
                if fwd:
                    arcs.append((u, v))
                if bwd and (spec.digon_allowed or not fwd):
                    arcs.append((v, u))
    return WeightedDigraph(n, arcs, tournament=(alpha == 1))


def gen_weights(n: int, weight_max: int, seed: int) -> dict[int, int]:
    """Uniform integer weights in [0, weight_max], drawn in vertex order."""
    if weight_max < 0:
        raise ValueError("weight_max must be nonnegative")
    stream = SplitMix64(seed)
    return {v: stream.below(weight_max + 1) for v in range(n)}


def gen_terminals(n: int, fraction: float, seed: int) -> frozenset[int]:
    """ceil(fraction * n) distinct vertices via a seeded shuffle."""
    if not 0.0 <= fraction <= 1.0:
        raise ValueError("fraction must lie in [0, 1]")
    k = math.ceil(fraction * n)
    ids = list(range(n))
    SplitMix64(seed).shuffle(ids)
    return frozenset(ids[:k])


def gen_instance(spec: GenSpec) -> tuple[WeightedDigraph, frozenset[int]]:
    """Full instance from one spec: structure, weights and terminals.

    Substreams are derived from spec.seed with fixed tags (1: arcs,
    2: weights, 3: terminals) so the three parts are independent.
    """
    g = gen_alpha_bounded(replace(spec, seed=derive_seed(spec.seed, 1)))
    g = g.replace_weights(gen_weights(spec.n, spec.weight_max, derive_seed(spec.seed, 2)))
    terminals = gen_terminals(spec.n, spec.terminal_fraction, derive_seed(spec.seed, 3))
    return g, terminals
