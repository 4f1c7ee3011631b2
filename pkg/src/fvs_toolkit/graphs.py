"""Digraph representation and the structural primitives used by the solvers.

Vertices are dense integer ids 0..n-1.  Adjacency lives in per-vertex
bitmasks (arbitrary-precision ints): bit v of ``out_bits[u]`` says the arc
(u, v) exists.  The masks double as an O(1) arc-membership table and turn
neighborhood intersections into single integer operations, which is what
keeps the randomized solvers fast enough in pure Python.  Graphs are
immutable after construction; induced subgraphs remember their parent ids
(``parent_ids``) so solutions found in a subproblem can be mapped back.

Digons (a 2-cycle u <-> v) are legal in general digraphs and count as
cycles everywhere; tournaments never contain them by construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence


class ExactLimitError(ValueError):
    """An exact computation was requested on an instance above its size cap."""


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Cycle:
    """A directed cycle as a vertex sequence; arcs run v[i] -> v[i+1] -> ... -> v[0]."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def is_cycle_of(self, g: "WeightedDigraph") -> bool:
        vs = self.vertices
        if len(vs) < 2 or len(set(vs)) != len(vs):
            return False
        if not all(0 <= v < g.n for v in vs):
            return False
        return all(g.has_arc(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


@dataclass(frozen=True)
class ReachPartition:
    """Vertices reachable / unreachable from a pivot, pivot excluded from both."""

    pivot: int
    reachable: frozenset[int]
    unreachable: frozenset[int]


class WeightedDigraph:
    """Immutable simple digraph with nonnegative integer vertex weights."""

    __slots__ = ("n", "weights", "tournament", "parent_ids", "out_bits", "in_bits")

    def __init__(
        self,
        n: int,
        arcs: Iterable[tuple[int, int]] = (),
        weights: Sequence[int] | Mapping[int, int] | None = None,
        tournament: bool = False,
        _parent_ids: tuple[int, ...] | None = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        out = [0] * n
        inb = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (out[u] >> v) & 1:
                raise ValueError(f"duplicate arc ({u}, {v})")
            out[u] |= 1 << v
            inb[v] |= 1 << u
        if tournament:
            full = (1 << n) - 1
            for v in range(n):
                if out[v] & inb[v]:
                    raise ValueError("not a tournament: digon at vertex "
                                     f"{next(_bits(out[v] & inb[v]))}")
                if out[v] | inb[v] | (1 << v) != full:
                    raise ValueError(f"not a tournament: vertex {v} misses a pair")
        if weights is None:
            w = (1,) * n
        elif isinstance(weights, Mapping):
            if set(weights) != set(range(n)):
                raise ValueError("weight map must cover exactly the vertices 0..n-1")
            w = tuple(weights[v] for v in range(n))
        else:
            if len(weights) != n:
                raise ValueError(f"expected {n} weights, got {len(weights)}")
            w = tuple(weights)
        for v, wv in enumerate(w):
            if not isinstance(wv, int) or isinstance(wv, bool) or wv < 0:
                raise ValueError(f"weight of vertex {v} must be a nonnegative integer")
        self.weights = w
        self.tournament = tournament
        self.parent_ids = _parent_ids
        self.out_bits = out
        self.in_bits = inb

    # -- basic accessors ------------------------------------------------

    def has_arc(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.out_bits[u] >> v) & 1)

    def out_neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(_bits(self.out_bits[v]))

    def in_neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(_bits(self.in_bits[v]))

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.out_bits[v].bit_count()

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.in_bits[v].bit_count()

    def arcs(self) -> Iterator[tuple[int, int]]:
        """All arcs in ascending (u, v) order."""
        for u in range(self.n):
            for v in _bits(self.out_bits[u]):
                yield (u, v)

    @property
    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self.out_bits)

    def weight_map(self) -> dict[int, int]:
        return {v: self.weights[v] for v in range(self.n)}

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"unknown vertex id {v}")

    # -- derived graphs -------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> "WeightedDigraph":
        """Induced subgraph on the given vertices, relabeled to dense ids.

        New ids follow ascending parent id; ``parent_ids[i]`` maps back.
        """
        vs = sorted(set(vertices))
        for v in vs:
            self._check_vertex(v)
        sub = WeightedDigraph.__new__(WeightedDigraph)
        k = len(vs)
        out = [0] * k
        inb = [0] * k
        for i, u in enumerate(vs):
            row = self.out_bits[u]
            m = 0
            for j, v in enumerate(vs):
                if (row >> v) & 1:
                    m |= 1 << j
            out[i] = m
        for i in range(k):
            for j in _bits(out[i]):
                inb[j] |= 1 << i
        sub.n = k
        sub.weights = tuple(self.weights[v] for v in vs)
        sub.tournament = self.tournament
        sub.parent_ids = tuple(vs)
        sub.out_bits = out
        sub.in_bits = inb
        return sub

    def without(self, vertices: Iterable[int]) -> "WeightedDigraph":
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def replace_weights(self, weights: Sequence[int] | Mapping[int, int]) -> "WeightedDigraph":
        g = WeightedDigraph.__new__(WeightedDigraph)
        g.n = self.n
        g.out_bits = self.out_bits
        g.in_bits = self.in_bits
        g.tournament = self.tournament
        g.parent_ids = self.parent_ids
        if isinstance(weights, Mapping):
            if set(weights) != set(range(self.n)):
                raise ValueError("weight map must cover exactly the vertices 0..n-1")
            w = tuple(weights[v] for v in range(self.n))
        else:
            if len(weights) != self.n:
                raise ValueError(f"expected {self.n} weights, got {len(weights)}")
            w = tuple(weights)
        for v, wv in enumerate(w):
            if not isinstance(wv, int) or isinstance(wv, bool) or wv < 0:
                raise ValueError(f"weight of vertex {v} must be a nonnegative integer")
        g.weights = w
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedDigraph):
            return NotImplemented
        return (self.n == other.n and self.out_bits == other.out_bits
                and self.weights == other.weights
                and self.tournament == other.tournament)

    def __hash__(self):
        return hash((self.n, tuple(self.out_bits), self.weights, self.tournament))

    def __repr__(self) -> str:
        kind = "Tournament" if self.tournament else "WeightedDigraph"
        return f"<{kind} n={self.n} m={self.arc_count}>"


# -- masked kernels (shared by the public operations and the solvers) ----


def _acyclic_masked(out: list[int], inb: list[int], alive: int) -> bool:
    """Kahn-style sink peeling restricted to the alive set."""
    if not alive:
        return True
    deg = {}
    stack = []
    for v in _bits(alive):
        d = (out[v] & alive).bit_count()
        deg[v] = d
        if d == 0:
            stack.append(v)
    removed = 0
    count = 0
    while stack:
        v = stack.pop()
        removed |= 1 << v
        count += 1
        for u in _bits(inb[v] & alive & ~removed):
            deg[u] -= 1
            if deg[u] == 0:
                stack.append(u)
    return count == len(deg)


def _reachable_masked(out: list[int], start: int, alive: int) -> int:
    """Mask of vertices reachable from start within alive (start included)."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= out[v]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _shortest_cycle_masked(
    out: list[int], inb: list[int], x: int, alive: int
) -> tuple[int, ...] | None:
    """Lexicographically smallest shortest cycle through x within alive.

    Reverse BFS from x gives the distance-to-x level sets; the cycle is then
    built forward, always taking the smallest-id vertex that keeps the exact
    remaining distance.  Strictly decreasing distance rules out repeats.
    """
    xbit = 1 << x
    levels = [xbit]
    seen = xbit
    frontier = xbit
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= inb[v]
        nxt &= alive & ~seen
        if not nxt:
            break
        levels.append(nxt)
        seen |= nxt
        frontier = nxt
    ys = out[x] & alive
    length = None
    for d in range(1, len(levels)):
        if levels[d] & ys:
            length = d + 1
            break
    if length is None:
        return None
    seq = [x]
    cur = x
    for i in range(1, length):
        cand = out[cur] & levels[length - i]
        cur = (cand & -cand).bit_length() - 1
        seq.append(cur)
    return tuple(seq)


def _girth_cycle_masked(out: list[int], inb: list[int], alive: int) -> tuple[int, ...] | None:
    """Shortest cycle within alive; ties resolved to the lexicographically
    smallest sequence rotated to start at its smallest vertex."""
    best: tuple[int, ...] | None = None
    for x in _bits(alive):
        seq = _shortest_cycle_masked(out, inb, x, alive)
        if seq is None:
            continue
        if best is None or (len(seq), seq) < (len(best), best):
            best = seq
            if len(best) == 2:
                break
    return best


def _triangle_through_masked(out: list[int], inb: list[int], x: int, alive: int) -> tuple[int, int, int] | None:
    """First triangle x -> b -> c -> x by ascending (b, c), within alive."""
    for b in _bits(out[x] & alive):
        cm = out[b] & inb[x] & alive
        if cm:
            return (x, b, (cm & -cm).bit_length() - 1)
    return None


def _s_triangle_masked(out: list[int], inb: list[int], smask: int, alive: int) -> tuple[int, int, int] | None:
    """First triangle containing a terminal, scanning terminals ascending."""
    for x in _bits(smask & alive):
        tri = _triangle_through_masked(out, inb, x, alive)
        if tri is not None:
            return tri
    return None


# -- public operations ----------------------------------------------------


def is_acyclic(g: WeightedDigraph) -> bool:
    """True iff g has no directed cycle (digons included)."""
    return _acyclic_masked(g.out_bits, g.in_bits, (1 << g.n) - 1)


def shortest_cycle_through(g: WeightedDigraph, x: int) -> Cycle | None:
    """Shortest directed cycle through x, or None.

    Ties break to the lexicographically smallest vertex sequence starting
    at x.
    """
    g._check_vertex(x)
    seq = _shortest_cycle_masked(g.out_bits, g.in_bits, x, (1 << g.n) - 1)
    return None if seq is None else Cycle(seq)


def shortest_cycle_in_induced(g: WeightedDigraph, c: Cycle) -> Cycle:
    """Shortest cycle of the subgraph induced by c's vertices.

    The result is induced (chordless): any extra arc among its vertices
    would close a strictly shorter cycle.  Ties break to the smallest
    vertex sequence, rotated to start at its smallest vertex.
    """
    if not c.is_cycle_of(g):
        raise ValueError("c is not a cycle of g")
    mask = 0
    for v in c.vertices:
        mask |= 1 << v
    seq = _girth_cycle_masked(g.out_bits, g.in_bits, mask)
    assert seq is not None
    return Cycle(seq)


def reach_partition(g: WeightedDigraph, x: int) -> ReachPartition:
    """Split V(g) - {x} into vertices reachable from x and the rest."""
    g._check_vertex(x)
    full = (1 << g.n) - 1
    seen = _reachable_masked(g.out_bits, x, full)
    reach = seen & ~(1 << x)
    rest = full & ~seen
    return ReachPartition(x, frozenset(_bits(reach)), frozenset(_bits(rest)))


def triangle_through(t: WeightedDigraph, x: int) -> Cycle | None:
    """First directed triangle through x in a tournament, or None.

    In a tournament a shortest cycle through x is always a triangle, so a
    missing triangle means no cycle passes through x at all.
    """
    if not t.tournament:
        raise ValueError("triangle_through requires a tournament")
    t._check_vertex(x)
    tri = _triangle_through_masked(t.out_bits, t.in_bits, x, (1 << t.n) - 1)
    return None if tri is None else Cycle(tri)


def triangle_in_sets(
    t: WeightedDigraph,
    first: Iterable[int],
    second: Iterable[int],
    third: Iterable[int],
) -> Cycle | None:
    """First triangle a -> b -> c -> a with a, b, c drawn from the given
    slot sets, scanning ascending by (a, b, c)."""
    if not t.tournament:
        raise ValueError("triangle_in_sets requires a tournament")
    m1 = m2 = m3 = 0
    for v in first:
        t._check_vertex(v)
        m1 |= 1 << v
    for v in second:
        t._check_vertex(v)
        m2 |= 1 << v
    for v in third:
        t._check_vertex(v)
        m3 |= 1 << v
    out, inb = t.out_bits, t.in_bits
    for a in _bits(m1):
        for b in _bits(out[a] & m2):
            cm = out[b] & inb[a] & m3
            if cm:
                return Cycle((a, b, (cm & -cm).bit_length() - 1))
    return None


def s_acyclic(t: WeightedDigraph, terminals: Iterable[int]) -> bool:
    """True iff no cycle of the tournament t passes through a terminal.

    Implemented as a triangle scan: cycles through a vertex exist exactly
    when triangles through it do.
    """
    if not t.tournament:
        raise ValueError("s_acyclic requires a tournament")
    smask = 0
    for v in terminals:
        t._check_vertex(v)
        smask |= 1 << v
    full = (1 << t.n) - 1
    return _s_triangle_masked(t.out_bits, t.in_bits, smask, full) is None


def high_inout_vertex(g: WeightedDigraph) -> int:
    """A vertex maximizing min(out-degree, in-degree); lowest id on ties."""
    if g.n == 0:
        raise ValueError("empty graph has no vertices")
    best_v = 0
    best_d = -1
    for v in range(g.n):
        d = min(g.out_bits[v].bit_count(), g.in_bits[v].bit_count())
        if d > best_d:
            best_d = d
            best_v = v
    return best_v


def hl_degree_ordering(g: WeightedDigraph) -> list[int]:
    """Ordering built by repeatedly extracting the max-min-degree vertex.

    Step i picks a vertex of the residual graph with the largest
    min(out, in) degree (lowest id on ties) and removes it.
    """
    out, inb = g.out_bits, g.in_bits
    alive = (1 << g.n) - 1
    order = []
    while alive:
        best_v = -1
        best_d = -1
        for v in _bits(alive):
            d = min((out[v] & alive).bit_count(), (inb[v] & alive).bit_count())
            if d > best_d:
                best_d = d
                best_v = v
        order.append(best_v)
        alive &= ~(1 << best_v)
    return order


def independence_number_exact(g: WeightedDigraph, limit: int = 20) -> int:
    """Exact independence number (no arc in either direction) by branching."""
    if g.n > limit:
        raise ExactLimitError(f"graph has {g.n} > {limit} vertices")
    und = [g.out_bits[v] | g.in_bits[v] for v in range(g.n)]
    best = 0

    def rec(rem: int, size: int) -> None:
        nonlocal best
        if size + rem.bit_count() <= best:
            return
        if not rem:
            best = max(best, size)
            return
        v = max(_bits(rem), key=lambda u: (und[u] & rem).bit_count())
        rec(rem & ~(und[v] | (1 << v)), size + 1)
        rec(rem & ~(1 << v), size)

    rec((1 << g.n) - 1, 0)
    return best
