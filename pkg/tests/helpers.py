"""Shared corpus generators and independent brute-force oracles.

Everything here is deliberately naive: answers are recomputed straight
from definitions (textbook BFS, exhaustive subset or permutation
enumeration), so the package never certifies itself in the tests that
matter.
"""
from __future__ import annotations

import heapq
import random
from collections import deque
from itertools import combinations, permutations, product

from ekdom.graph import Graph

DEFAULT_SEED = 20240811


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree by decoding a random Pruefer sequence."""
    if n == 1:
        return Graph.build(1, [])
    if n == 2:
        return Graph.build(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return tree_from_pruefer(n, seq)


def tree_from_pruefer(n: int, seq: list[int]) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.build(n, edges)


def random_connected_graph(n: int, extra: float, rng: random.Random) -> Graph:
    """Random tree plus each chord independently with probability extra."""
    tree = random_tree(n, rng)
    edges = set(tree.edges())
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra:
                edges.add((u, v))
    return Graph.build(n, sorted(edges))


# -- oracles ------------------------------------------------------------------

def oracle_distances(g: Graph) -> list[list[int]]:
    """Textbook BFS from scratch, independent of ekdom.graph."""
    out = []
    for src in range(g.n):
        dist = [None] * g.n
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] is None:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        out.append(dist)
    return out


def oracle_is_dominating(g: Graph, guards, k: int) -> bool:
    dist = oracle_distances(g)
    return all(any(dist[u][v] is not None and dist[u][v] <= k for u in set(guards))
               for v in range(g.n))


def oracle_gamma(g: Graph, k: int) -> int:
    """Smallest dominating set size by exhaustive subset enumeration."""
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            if oracle_is_dominating(g, subset, k):
                return size
    raise AssertionError("even the full vertex set failed to dominate")


def oracle_transforms(g: Graph, src, dst, k: int) -> bool:
    """Movement feasibility by trying every guard-to-target permutation."""
    dist = oracle_distances(g)
    return any(all(dist[a][b] is not None and dist[a][b] <= k
                   for a, b in zip(src, perm))
               for perm in permutations(dst))


def oracle_dominating_multisets(g: Graph, k: int, q: int) -> list[tuple]:
    from itertools import combinations_with_replacement
    return [cfg for cfg in combinations_with_replacement(range(g.n), q)
            if oracle_is_dominating(g, cfg, k)]


# -- canonical forms, for exhaustive small-tree corpora -----------------------

def _ahu(g: Graph, root: int) -> str:
    def encode(u: int, parent: int) -> str:
        inner = sorted(encode(w, u) for w in g.adj[u] if w != parent)
        return "(" + "".join(inner) + ")"
    return encode(root, -1)


def _centers(g: Graph) -> list[int]:
    if g.n == 1:
        return [0]
    degree = [g.degree(v) for v in range(g.n)]
    layer = [v for v in range(g.n) if degree[v] == 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in g.adj[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
            degree[v] = 0
        layer = nxt
    return sorted(layer)


def canonical_tree(g: Graph) -> tuple:
    return tuple(sorted(_ahu(g, c) for c in _centers(g)))


_TREE_CACHE: dict[int, list[Graph]] = {}


def all_trees_exactly(n: int) -> list[Graph]:
    """Every non-isomorphic tree on n vertices (exhaustive Pruefer sweep).

    Practical through n = 8 (8^6 sequences); use sampling beyond that.
    Cached per process: several test modules walk the same corpus.
    """
    if n in _TREE_CACHE:
        return _TREE_CACHE[n]
    if n == 1:
        trees = [Graph.build(1, [])]
    elif n == 2:
        trees = [Graph.build(2, [(0, 1)])]
    else:
        seen = {}
        for seq in product(range(n), repeat=n - 2):
            t = tree_from_pruefer(n, list(seq))
            seen.setdefault(canonical_tree(t), t)
        trees = list(seen.values())
    _TREE_CACHE[n] = trees
    return trees
