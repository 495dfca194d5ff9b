"""Pure-Python elimination kernel (reference twin of the C extension).

Given all size-q dominating configurations of a graph, keep deleting every
configuration that cannot answer some attacked vertex with a surviving
configuration, until a full pass deletes nothing.  What survives is the
unique maximal family closed under defense at this size; the defended
number is the least q whose survivor set is non-empty.

An attack on an occupied vertex is always answerable by standing still,
so only unoccupied vertices are checked.  The expensive question "can
configuration i answer attack v with some surviving j" is amortised:

* per (i, v) we remember the last successor that worked (``wit``); while
  it stays alive the recheck is O(1);
* when it dies, scanning the candidate list for v (configurations whose
  support contains v, ascending) resumes from the stored cursor
  (``pos``).  Everything behind the cursor is either dead forever or
  failed the static movement test, so the cursor never moves backwards.

Movement feasibility between two configurations is a perfect matching on
the q x q "guard can walk there" grid, preceded by two bitmask
rejections: every guard needs some reachable target, and every target
needs some guard that reaches it.  Pair verdicts are static and memoised.

Both kernels return ``(alive, rounds, checks, exceeded)`` where ``alive``
is a bytearray of 0/1 flags over the input configurations, ``rounds``
counts full passes including the final quiet one, ``checks`` counts
(configuration, attack) evaluations, and ``exceeded`` reports that the
check budget ran out (in which case ``alive`` is meaningless).
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

DEFAULT_BUDGET = 5_000_000


def _prepare(n: int, k: int, dist: list[int], states: list[tuple]):
    """Shared precomputation: ball masks, per-state masks, candidate lists."""
    balls = []
    for u in range(n):
        m = 0
        base = u * n
        for v in range(n):
            if dist[base + v] <= k:
                m |= 1 << v
        balls.append(m)
    support = []
    reach = []
    cand: list[list[int]] = [[] for _ in range(n)]
    for i, st in enumerate(states):
        sm = 0
        rm = 0
        for u in set(st):
            sm |= 1 << u
            rm |= balls[u]
            cand[u].append(i)
        support.append(sm)
        reach.append(rm)
    return support, reach, cand


def _matcher(n: int, k: int, dist: list[int], states: list[tuple],
             support: list[int], reach: list[int]):
    """Build the memoised pairwise movement test."""
    q = len(states[0])
    memo: dict[int, bool] = {}
    S = len(states)

    def feasible(i: int, j: int) -> bool:
        if support[j] & ~reach[i] or support[i] & ~reach[j]:
            return False
        if i == j or q == 1:
            return True
        key = i * S + j
        hit = memo.get(key)
        if hit is not None:
            return hit
        a, b = states[i], states[j]
        owner = [-1] * q

        def augment(p: int, seen: list[bool]) -> bool:
            base = a[p] * n
            for c in range(q):
                if not seen[c] and dist[base + b[c]] <= k:
                    seen[c] = True
                    if owner[c] < 0 or augment(owner[c], seen):
                        owner[c] = p
                        return True
            return False

        ok = all(augment(p, [False] * q) for p in range(q))
        memo[key] = ok
        return ok

    return feasible


def run_elimination(n: int, k: int, dist: list[int], states: list[tuple],
                    order: str = "forward", budget: int = DEFAULT_BUDGET):
    """Gauss-Seidel elimination: deletions take effect within the pass."""
    S = len(states)
    if S == 0:
        return bytearray(), 0, 0, False
    support, reach, cand = _prepare(n, k, dist, states)
    feasible = _matcher(n, k, dist, states, support, reach)
    alive = bytearray([1]) * S
    pos = [[0] * n for _ in range(S)]
    wit = [[-1] * n for _ in range(S)]
    if order == "forward":
        sweep = range(S)
    elif order == "reverse":
        sweep = range(S - 1, -1, -1)
    else:
        raise ValueError(f"unknown order {order!r}")
    checks = 0
    rounds = 0
    changed = True
    while changed:
        changed = False
        rounds += 1
        for i in sweep:
            if not alive[i]:
                continue
            sup_i = support[i]
            pos_i = pos[i]
            wit_i = wit[i]
            for v in range(n):
                if sup_i >> v & 1:
                    continue  # standing still answers an occupied vertex
                checks += 1
                if checks > budget:
                    return alive, rounds, checks, True
                w = wit_i[v]
                if w >= 0 and alive[w]:
                    continue
                cv = cand[v]
                top = len(cv)
                p = pos_i[v]
                while p < top:
                    j = cv[p]
                    if alive[j] and feasible(i, j):
                        break
                    p += 1
                pos_i[v] = p
                if p < top:
                    wit_i[v] = cv[p]
                else:
                    alive[i] = 0
                    changed = True
                    break
    return alive, rounds, checks, False


def run_elimination_jacobi(n: int, k: int, dist: list[int], states: list[tuple],
                           budget: int = DEFAULT_BUDGET, threads: int = 1):
    """Round-synchronous variant: every pass checks against the previous
    pass's survivor snapshot, so per-state work can run in parallel.

    Reaches the same fixed point as the Gauss-Seidel sweeps (it is unique),
    possibly in more rounds.
    """
    S = len(states)
    if S == 0:
        return bytearray(), 0, 0, False
    support, reach, cand = _prepare(n, k, dist, states)
    feasible = _matcher(n, k, dist, states, support, reach)
    alive = bytearray([1]) * S
    pos = [[0] * n for _ in range(S)]
    wit = [[-1] * n for _ in range(S)]
    checks = 0
    rounds = 0

    def survives(i: int, snapshot: bytearray) -> tuple[int, bool]:
        # Returns (checks spent, survived); touches only row i of pos/wit.
        spent = 0
        sup_i = support[i]
        pos_i = pos[i]
        wit_i = wit[i]
        for v in range(n):
            if sup_i >> v & 1:
                continue
            spent += 1
            w = wit_i[v]
            if w >= 0 and snapshot[w]:
                continue
            cv = cand[v]
            top = len(cv)
            p = pos_i[v]
            while p < top:
                j = cv[p]
                if snapshot[j] and feasible(i, j):
                    break
                p += 1
            pos_i[v] = p
            if p < top:
                wit_i[v] = cv[p]
            else:
                return spent, False
        return spent, True

    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while True:
            rounds += 1
            snapshot = bytes(alive)
            live = [i for i in range(S) if snapshot[i]]
            if pool is not None:
                results = list(pool.map(lambda i: (i, *survives(i, snapshot)), live))
            else:
                results = [(i, *survives(i, snapshot)) for i in live]
            changed = False
            for i, spent, ok in results:
                checks += spent
                if not ok:
                    alive[i] = 0
                    changed = True
            if not changed:
                return alive, rounds, checks, False  # fixed point confirmed
            if checks > budget:
                return alive, rounds, checks, True
    finally:
        if pool is not None:
            pool.shutdown()
