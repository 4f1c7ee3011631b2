"""Solver result container."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Solution:
    """A vertex set returned by a solver, with provenance.

    weight is recomputed from the instance's original weights, and valid
    records the outcome of the feasibility recheck done before returning.
    seed is None for deterministic algorithms.
    """

    vertices: frozenset[int]
    weight: int
    algorithm: str
    seed: int | None
    valid: bool

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)
