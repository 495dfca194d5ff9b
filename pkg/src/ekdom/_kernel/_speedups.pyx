# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ekdom._kernel.pure.run_elimination.

Same contract and identical sweep/scan semantics as the pure kernel, so
the two return byte-for-byte equal results; see pure.py for the algorithm
notes.  Configurations are capped at 64 vertices (masks live in one
machine word); the selection layer falls back to the pure kernel beyond
that.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memset


cdef bint _augment(int p, int* a, int* b, int* owner, unsigned char* seen,
                   int* dist, int n, int k, int q) noexcept:
    cdef int c, base = a[p] * n
    for c in range(q):
        if not seen[c] and dist[base + b[c]] <= k:
            seen[c] = 1
            if owner[c] < 0 or _augment(owner[c], a, b, owner, seen, dist, n, k, q):
                owner[c] = p
                return True
    return False


cdef bint _feasible(int i, int j, int q, int* st,
                    unsigned long long* support, unsigned long long* reach,
                    int* dist, int n, int k, int* owner, unsigned char* seen) noexcept:
    if (support[j] & ~reach[i]) or (support[i] & ~reach[j]):
        return False
    if i == j or q == 1:
        return True
    cdef int p, c
    cdef int* a = st + i * q
    cdef int* b = st + j * q
    for c in range(q):
        owner[c] = -1
    for p in range(q):
        memset(seen, 0, q)
        if not _augment(p, a, b, owner, seen, dist, n, k, q):
            return False
    return True


def run_elimination(int n, int k, dist, states, order="forward",
                    long long budget=5_000_000):
    cdef Py_ssize_t S = len(states)
    if S == 0:
        return bytearray(), 0, 0, False
    if n > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")
    cdef int q = len(states[0])
    cdef bint forward
    if order == "forward":
        forward = True
    elif order == "reverse":
        forward = False
    else:
        raise ValueError(f"unknown order {order!r}")

    cdef int* cdist = <int*> calloc(n * n, sizeof(int))
    cdef int* st = <int*> calloc(S * q, sizeof(int))
    cdef unsigned long long* balls = <unsigned long long*> calloc(n, sizeof(unsigned long long))
    cdef unsigned long long* support = <unsigned long long*> calloc(S, sizeof(unsigned long long))
    cdef unsigned long long* reach = <unsigned long long*> calloc(S, sizeof(unsigned long long))
    cdef int* cand_off = <int*> calloc(n + 1, sizeof(int))
    cdef int* pos = <int*> calloc(S * n, sizeof(int))
    cdef int* wit = <int*> calloc(S * n, sizeof(int))
    cdef unsigned char* alive = <unsigned char*> calloc(S, sizeof(unsigned char))
    cdef int* owner = <int*> calloc(q, sizeof(int))
    cdef unsigned char* seen = <unsigned char*> calloc(q, sizeof(unsigned char))
    cdef int* cand_flat = NULL
    cdef int* fill = NULL

    cdef Py_ssize_t i, idx
    cdef int u, v, t, p, top, j, w, total
    cdef long long checks = 0
    cdef int rounds = 0
    cdef bint changed, exceeded = False, dead
    cdef unsigned long long sup_i
    cdef Py_ssize_t sweep_i

    try:
        if (cdist == NULL or st == NULL or balls == NULL or support == NULL
                or reach == NULL or cand_off == NULL or pos == NULL
                or wit == NULL or alive == NULL or owner == NULL or seen == NULL):
            raise MemoryError()
        for idx in range(n * n):
            cdist[idx] = dist[idx]
        for i in range(S):
            tup = states[i]
            for t in range(q):
                st[i * q + t] = tup[t]
        for u in range(n):
            for v in range(n):
                if cdist[u * n + v] <= k:
                    balls[u] |= 1ULL << v
        # Support and reach masks; candidate counts over unique guard posts
        # (states are sorted, so duplicates are adjacent).
        for i in range(S):
            for t in range(q):
                u = st[i * q + t]
                if t > 0 and u == st[i * q + t - 1]:
                    continue
                support[i] |= 1ULL << u
                reach[i] |= balls[u]
                cand_off[u + 1] += 1
        for u in range(n):
            cand_off[u + 1] += cand_off[u]
        total = cand_off[n]
        cand_flat = <int*> calloc(total if total else 1, sizeof(int))
        fill = <int*> calloc(n, sizeof(int))
        if cand_flat == NULL or fill == NULL:
            raise MemoryError()
        for i in range(S):  # ascending state index keeps buckets sorted
            for t in range(q):
                u = st[i * q + t]
                if t > 0 and u == st[i * q + t - 1]:
                    continue
                cand_flat[cand_off[u] + fill[u]] = <int> i
                fill[u] += 1
        for i in range(S):
            alive[i] = 1
        for idx in range(S * n):
            wit[idx] = -1

        changed = True
        while changed and not exceeded:
            changed = False
            rounds += 1
            for sweep_i in range(S):
                i = sweep_i if forward else S - 1 - sweep_i
                if not alive[i]:
                    continue
                sup_i = support[i]
                dead = False
                for v in range(n):
                    if sup_i >> v & 1:
                        continue
                    checks += 1
                    if checks > budget:
                        exceeded = True
                        break
                    w = wit[i * n + v]
                    if w >= 0 and alive[w]:
                        continue
                    top = cand_off[v + 1]
                    p = cand_off[v] + pos[i * n + v]
                    while p < top:
                        j = cand_flat[p]
                        if alive[j] and _feasible(<int> i, j, q, st, support,
                                                  reach, cdist, n, k, owner, seen):
                            break
                        p += 1
                    pos[i * n + v] = p - cand_off[v]
                    if p < top:
                        wit[i * n + v] = cand_flat[p]
                    else:
                        alive[i] = 0
                        changed = True
                        dead = True
                        break
                if dead or exceeded:
                    if exceeded:
                        break
                    continue

        out = bytearray(S)
        for i in range(S):
            out[i] = alive[i]
        return out, rounds, checks, exceeded
    finally:
        free(cdist); free(st); free(balls); free(support); free(reach)
        free(cand_off); free(pos); free(wit); free(alive); free(owner)
        free(seen); free(cand_flat); free(fill)
