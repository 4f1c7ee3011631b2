"""Solver configuration profiles.

The randomized solvers carry all of their numeric knobs in an
:class:`AlgoConfig`.  Two profiles exist:

* ``paper``: the literal constants the approximation analysis needs
  (exhaustive base case at 30*alpha vertices, 28*alpha pivot trials,
  light sets of ceil(n / 6*alpha) vertices, terminal base case at 30 with
  subsets up to size 30).  These are astronomically expensive and exist to
  state the algorithm faithfully, not to be run on nontrivial inputs.
* ``desk``: small substitutes that keep every structural step intact while
  making runs on a workstation feasible.  The approximation guarantee no
  longer follows, but solutions stay feasible unconditionally.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class AlgoConfig:
    """Numeric constants shared by the two randomized solvers.

    base_case_n     -- solve exactly once at most this many vertices remain
    repetitions     -- random pivot trials per recursion level
    light_den       -- a light set holds ceil(n / light_den) lightest vertices
    sfvs_base_s     -- terminal count at which the tournament solver stops recursing
    sfvs_subset_cap -- largest terminal subset enumerated by the tournament base case
    """

    profile: str
    base_case_n: int
    repetitions: int
    light_den: int
    sfvs_base_s: int
    sfvs_subset_cap: int

    def __post_init__(self):
        if self.profile not in ("paper", "desk"):
            raise ValueError(f"unknown profile {self.profile!r}")
        for field in ("base_case_n", "repetitions", "light_den",
                      "sfvs_base_s", "sfvs_subset_cap"):
            v = getattr(self, field)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"{field} must be a positive integer, got {v!r}")


def paper_profile(alpha: int = 1) -> AlgoConfig:
    """Literal constants; impractical beyond toy sizes."""
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    return AlgoConfig(
        profile="paper",
        base_case_n=30 * alpha,
        repetitions=28 * alpha,
        light_den=6 * alpha,
        sfvs_base_s=30,
        sfvs_subset_cap=30,
    )


def desk_profile(alpha: int = 1) -> AlgoConfig:
    """Workstation-scale constants; same structure, feasible runtimes."""
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    return AlgoConfig(
        profile="desk",
        base_case_n=10,
        repetitions=28 * alpha,
        light_den=6 * alpha,
        sfvs_base_s=8,
        sfvs_subset_cap=2,
    )
