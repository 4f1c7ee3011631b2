"""Plain-text instance files.

Format, one instance per file:

    # optional comment lines (generators record their GenSpec here)
    n <count> [tournament]
    w <w0> <w1> ... <w(n-1)>
    a <u> <v>          (one line per arc)
    S <v1> <v2> ...    (optional terminal set; bare "S" means empty)

Comments and blank lines may appear anywhere.  The writer is canonical
(arcs ascending, terminals ascending, no trailing noise), so identical
instances serialize to identical bytes.
"""
from __future__ import annotations

from typing import Iterable

from .generators import GenSpec
from .graphs import WeightedDigraph


class GraphFormatError(ValueError):
    """Malformed instance file; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


def _ints(parts: list[str], line_no: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(line_no, f"expected integers, got {parts!r}") from None


def parse_graph(text: str) -> tuple[WeightedDigraph, frozenset[int] | None]:
    """Parse an instance; terminals are None when the file has no S line."""
    n = None
    tournament = False
    weights = None
    arcs: list[tuple[int, int]] = []
    arc_seen: set[tuple[int, int]] = set()
    terminals: frozenset[int] | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "n":
            if n is not None:
                raise GraphFormatError(line_no, "duplicate n line")
            if len(parts) == 3 and parts[2] == "tournament":
                tournament = True
            elif len(parts) != 2:
                raise GraphFormatError(line_no, "n line must be 'n <count> [tournament]'")
            (n,) = _ints(parts[1:2], line_no)
            if n < 0:
                raise GraphFormatError(line_no, "vertex count must be nonnegative")
        elif tag == "w":
            if n is None:
                raise GraphFormatError(line_no, "w line before n line")
            if weights is not None:
                raise GraphFormatError(line_no, "duplicate w line")
            weights = _ints(parts[1:], line_no)
            if len(weights) != n:
                raise GraphFormatError(line_no, f"expected {n} weights, got {len(weights)}")
            bad = next((w for w in weights if w < 0), None)
            if bad is not None:
                raise GraphFormatError(line_no, f"negative weight {bad}")
        elif tag == "a":
            if n is None or weights is None:
                raise GraphFormatError(line_no, "arc line before n/w lines")
            vals = _ints(parts[1:], line_no)
            if len(vals) != 2:
                raise GraphFormatError(line_no, "arc line must be 'a <u> <v>'")
            u, v = vals
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(line_no, f"arc ({u}, {v}) out of range")
            if u == v:
                raise GraphFormatError(line_no, f"self-loop at {u}")
            if (u, v) in arc_seen:
                raise GraphFormatError(line_no, f"duplicate arc ({u}, {v})")
            arc_seen.add((u, v))
            arcs.append((u, v))
        elif tag == "S":
            if n is None:
                raise GraphFormatError(line_no, "S line before n line")
            if terminals is not None:
                raise GraphFormatError(line_no, "duplicate S line")
            vals = _ints(parts[1:], line_no)
            seen: set[int] = set()
            for v in vals:
                if not 0 <= v < n:
                    raise GraphFormatError(line_no, f"terminal {v} out of range")
                if v in seen:
                    raise GraphFormatError(line_no, f"duplicate terminal {v}")
                seen.add(v)
            terminals = frozenset(seen)
        else:
            raise GraphFormatError(line_no, f"unknown line tag {tag!r}")
    if n is None:
        raise GraphFormatError(1, "missing n line")
    if weights is None:
        raise GraphFormatError(1, "missing w line")
    try:
        g = WeightedDigraph(n, arcs, weights, tournament=tournament)
    except ValueError as exc:
        raise GraphFormatError(1, str(exc)) from None
    return g, terminals


def dump_graph(
    g: WeightedDigraph,
    terminals: Iterable[int] | None = None,
    comments: Iterable[str] = (),
) -> str:
    """Serialize canonically; comments go first, one '# ' prefix each."""
    lines = [f"# {c}" for c in comments]
    head = f"n {g.n} tournament" if g.tournament else f"n {g.n}"
    lines.append(head)
    lines.append("w " + " ".join(str(w) for w in g.weights))
    for u, v in g.arcs():
        lines.append(f"a {u} {v}")
    if terminals is not None:
        terms = sorted(set(terminals))
        for v in terms:
            g._check_vertex(v)
        lines.append(("S " + " ".join(str(v) for v in terms)) if terms else "S")
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> tuple[WeightedDigraph, frozenset[int] | None]:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(
    path: str,
    g: WeightedDigraph,
    terminals: Iterable[int] | None = None,
    comments: Iterable[str] = (),
) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_graph(g, terminals, comments))


def genspec_comment(spec: GenSpec) -> str:
    """Provenance line the gen CLI embeds; parseable by genspec_from_text."""
    return ("genspec"
            f" n={spec.n} alpha={spec.alpha} cross_arc_prob={spec.cross_arc_prob!r}"
            f" digon_allowed={int(spec.digon_allowed)} weight_max={spec.weight_max}"
            f" terminal_fraction={spec.terminal_fraction!r} seed={spec.seed}")


def genspec_from_text(text: str) -> GenSpec | None:
    """Recover a GenSpec from a file's comment header, if one is present."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line.startswith("#"):
            continue
        body = line.lstrip("#").strip()
        if not body.startswith("genspec"):
            continue
        parts = [part.split("=", 1) for part in body.split()[1:]]
        if any(len(p) != 2 for p in parts):
            return None
        fields = dict(parts)
        try:
            return GenSpec(
                n=int(fields["n"]),
                alpha=int(fields["alpha"]),
                cross_arc_prob=float(fields["cross_arc_prob"]),
                digon_allowed=bool(int(fields["digon_allowed"])),
                weight_max=int(fields["weight_max"]),
                terminal_fraction=float(fields["terminal_fraction"]),
                seed=int(fields["seed"]),
            )
        except (KeyError, ValueError):
            return None
    return None
