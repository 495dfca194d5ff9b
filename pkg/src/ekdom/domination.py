"""Exact distance-k domination numbers and dominating-set predicates.

A multiset of guard positions distance-k dominates a graph when every
vertex lies within distance k of some guard.  Multiplicity never matters
for the static problem, so the exact search works over plain vertex sets.

The search enumerates candidate sets by increasing cardinality (so the
first witness found is minimum), branching on the guards that can cover
the lowest uncovered vertex.  A greedy cover provides the upper bound that
terminates the iteration deepening.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .graph import DistMatrix, Graph, all_pairs_distances


@dataclass(frozen=True)
class DominationResult:
    gamma: int
    witness: tuple[int, ...]


def ball_masks(dist: DistMatrix, k: int) -> list[int]:
    """Bitmask of the closed distance-k neighborhood of every vertex."""
    n = len(dist)
    masks = []
    for u in range(n):
        m = 0
        row = dist[u]
        for v in range(n):
            if row[v] <= k:
                m |= 1 << v
        masks.append(m)
    return masks


def is_distance_k_dominating(dist: DistMatrix, guards: Iterable[int], k: int) -> bool:
    """True iff every vertex is within distance k of some guard."""
    if k < 0:
        raise ValueError("k must be non-negative")
    n = len(dist)
    posts = set(guards)
    covered = 0
    for u in posts:
        row = dist[u]
        for v in range(n):
            if row[v] <= k:
                covered |= 1 << v
    return covered == (1 << n) - 1


def _greedy_cover(balls: list[int], full: int) -> list[int]:
    covered = 0
    chosen: list[int] = []
    while covered != full:
        best, gain = -1, -1
        for v, ball in enumerate(balls):
            g = (ball | covered).bit_count() - covered.bit_count()
            if g > gain:
                best, gain = v, g
        chosen.append(best)
        covered |= balls[best]
    return chosen


def gamma_k(g: Graph, k: int) -> DominationResult:
    """Exact minimum distance-k domination number with a witness set.

    Works on disconnected graphs as well: guards never cover across
    components, so the search naturally computes the per-component sum.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if g.n == 0:
        return DominationResult(0, ())
    return _gamma_k_cached(g, k)


@lru_cache(maxsize=None)
def _gamma_k_cached(g: Graph, k: int) -> DominationResult:
    dist = all_pairs_distances(g)
    n = g.n
    full = (1 << n) - 1
    balls = ball_masks(dist, k)
    greedy = _greedy_cover(balls, full)
    # Guards that can cover a vertex, largest ball first for fast witnesses.
    by_reach = sorted(range(n), key=lambda v: (-balls[v].bit_count(), v))
    coverers = [[u for u in by_reach if balls[u] >> t & 1] for t in range(n)]
    max_ball = max(b.bit_count() for b in balls)

    def search(size: int, covered: int, chosen: list[int]) -> tuple[int, ...] | None:
        if covered == full:
            return tuple(sorted(chosen))
        slots = size - len(chosen)
        if slots == 0 or (full & ~covered).bit_count() > slots * max_ball:
            return None
        uncovered = full & ~covered
        target = (uncovered & -uncovered).bit_length() - 1  # lowest uncovered vertex
        for u in coverers[target]:
            if u in chosen:
                continue
            found = search(size, covered | balls[u], chosen + [u])
            if found is not None:
                return found
        return None

    for size in range(1, len(greedy)):
        witness = search(size, 0, [])
        if witness is not None:
            return DominationResult(size, witness)
    return DominationResult(len(greedy), tuple(sorted(greedy)))
