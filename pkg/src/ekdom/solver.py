"""The game engine: exact eternal distance-k domination numbers.

For a guard count q, the engine enumerates every size-q dominating
configuration and runs greatest-fixed-point elimination (see
``ekdom._kernel``): configurations that cannot answer some attack with a
surviving configuration are deleted until nothing changes.  The defended
number is the least q whose survivor set is non-empty; q starts at the
static domination number and Prop-style sandwich bounds cap it from
above, so the loop always terminates.

Alongside the number, the solver extracts an explicit certificate: a
family of configurations plus, for every (family member, attacked vertex)
pair, a successor member containing the attack and a per-guard move list
realising the transition.  ``verify_certificate`` re-checks such an
object from scratch using only distances and multiset arithmetic, with no
access to solver internals, so solver and verifier form independent
routes to the same claim.

State budget: enumerating and eliminating is capped by a configurable
number of (configuration, attack) checks per guard count (default five
million).  When the cap trips, ``eternal_number`` degrades gracefully to
the bracketing bounds established so far.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable

from . import _kernel
from .configs import Config, canonical, enumerate_dominating_configs, transform_assignment
from .domination import gamma_k, is_distance_k_dominating
from .graph import Graph, all_pairs_distances, induced_subgraph, is_connected, components

DEFAULT_BUDGET = _kernel.DEFAULT_BUDGET


class BudgetExceededError(RuntimeError):
    """The configured (configuration, attack) check budget ran out."""


@dataclass(frozen=True)
class QStats:
    """Elimination statistics for one guard count."""
    q: int
    num_configs: int
    rounds: int
    checks: int
    survivors: int
    exceeded: bool


@dataclass
class EternalCertificate:
    """Explicit defense strategy at guard count q.

    ``response[(i, v)]`` names the successor family index and the guard
    move list used when the family member i faces an attack at vertex v.
    """
    k: int
    q: int
    family: tuple[Config, ...]
    response: dict

    def __post_init__(self):
        self.response = dict(self.response)


@dataclass(frozen=True)
class CertificateViolation:
    state: int | None
    attack: str | None
    reason: str


@dataclass
class SolveReport:
    k: int
    gamma_eternal: int | None
    lower_bound: int
    upper_bound: int
    gamma_k_value: int
    gamma_half_value: int
    per_q: list[QStats]
    certificate: EternalCertificate | None
    budget_exceeded: bool
    component_reports: list["SolveReport"] | None = None

    @property
    def resolved(self) -> bool:
        return self.gamma_eternal is not None


@lru_cache(maxsize=None)
def _flat_distances(g: Graph) -> list:
    return [d for row in all_pairs_distances(g) for d in row]


# (graph, k, q, order) -> (frozenset of survivors, QStats, budget used)
_FIXED_POINT_CACHE: dict = {}


def clear_cache() -> None:
    _FIXED_POINT_CACHE.clear()


def _solve_q(g: Graph, k: int, q: int, budget: int, order: str,
             threads: int = 1) -> tuple[frozenset, QStats]:
    effective = "jacobi" if threads > 1 else order
    key = (g, k, q, effective)
    hit = _FIXED_POINT_CACHE.get(key)
    if hit is not None:
        survivors, stats, had_budget = hit
        if not stats.exceeded or had_budget >= budget:
            return survivors, stats
    dist = all_pairs_distances(g)
    states = enumerate_dominating_configs(dist, k, q)
    alive, rounds, checks, exceeded = _kernel.run_elimination(
        g.n, k, _flat_distances(g), states, order=order, budget=budget,
        threads=threads)
    if exceeded:
        survivors: frozenset = frozenset()
    else:
        survivors = frozenset(states[i] for i in range(len(states)) if alive[i])
    stats = QStats(q, len(states), rounds, checks, len(survivors), exceeded)
    _FIXED_POINT_CACHE[key] = (survivors, stats, budget)
    return survivors, stats


def eternal_survivors(g: Graph, k: int, q: int, budget: int = DEFAULT_BUDGET,
                      order: str = "forward") -> frozenset:
    """All size-q configurations that belong to some defense-closed family.

    Raises BudgetExceededError when the instance does not fit the budget.
    """
    if not is_connected(g):
        raise ValueError("survivor sets are defined per connected graph")
    _check_feasible(g.n, q, budget)
    survivors, stats = _solve_q(g, k, q, budget, order)
    if stats.exceeded:
        raise BudgetExceededError(
            f"q={q}: {stats.checks} checks exceeded budget {budget}")
    return survivors


def _check_feasible(n: int, q: int, budget: int) -> None:
    if comb(n + q - 1, q) * max(n, 1) > budget:
        raise BudgetExceededError(
            f"state space C({n + q - 1},{q}) x {n} attacks exceeds budget {budget}")


def eternal_number(g: Graph, k: int, q_min: int | None = None,
                   q_max: int | None = None, budget: int = DEFAULT_BUDGET,
                   order: str = "forward", threads: int = 1,
                   want_certificate: bool = True,
                   certificate_cap: int = 20_000) -> SolveReport:
    """Exact eternal distance-k domination number with certificate.

    Guard counts are tried upward from max(static domination number,
    q_min); the first non-empty fixed point wins.  On disconnected input
    the components are solved independently and summed (guards can never
    cross components), with per-component reports attached.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 0:
        raise ValueError("empty graph")
    if not is_connected(g):
        return _solve_components(g, k, budget, order, threads)

    gk = gamma_k(g, k).gamma
    gh = gamma_k(g, k // 2).gamma
    q_lo = max(gk, q_min if q_min is not None else 1)
    # A defense-closed family exists at every size from the true number up
    # (extra guards can idle), so the static upper bound caps the search
    # unless the caller started above it.
    q_hi = q_max if q_max is not None else max(gh, q_lo)
    per_q: list[QStats] = []
    lower = gk  # only completed empty fixed points may lift this
    exceeded = False
    for q in range(q_lo, q_hi + 1):
        try:
            _check_feasible(g.n, q, budget)
        except BudgetExceededError:
            exceeded = True
            break
        survivors, stats = _solve_q(g, k, q, budget, order, threads)
        per_q.append(stats)
        if stats.exceeded:
            exceeded = True
            break
        if survivors:
            cert = None
            if want_certificate:
                cert = _build_certificate(g, k, q, survivors, certificate_cap)
            return SolveReport(k, q, q, q, gk, gh, per_q, cert, False)
        lower = q + 1
    if not exceeded and q_max is None:
        raise RuntimeError(
            "no non-empty fixed point up to the static upper bound; "
            "this contradicts the sandwich and indicates an engine bug")
    return SolveReport(k, None, lower, gh, gk, gh, per_q, None, exceeded)


def _solve_components(g: Graph, k: int, budget: int, order: str,
                      threads: int) -> SolveReport:
    reports = []
    for comp in components(g):
        sub, _ = induced_subgraph(g, comp)
        reports.append(eternal_number(sub, k, budget=budget, order=order,
                                      threads=threads, want_certificate=False))
    gamma = sum(r.gamma_eternal for r in reports) if all(r.resolved for r in reports) else None
    return SolveReport(
        k=k,
        gamma_eternal=gamma,
        lower_bound=sum(r.lower_bound for r in reports),
        upper_bound=sum(r.upper_bound for r in reports),
        gamma_k_value=sum(r.gamma_k_value for r in reports),
        gamma_half_value=sum(r.gamma_half_value for r in reports),
        per_q=[],
        certificate=None,
        budget_exceeded=any(r.budget_exceeded for r in reports),
        component_reports=reports,
    )


def is_eternal_set(g: Graph, k: int, guards: Iterable[int],
                   budget: int = DEFAULT_BUDGET) -> bool:
    """Whether this guard multiset belongs to some defense-closed family.

    Runs the fixed point at q = len(guards) and reports membership.
    Raises BudgetExceededError when that fixed point does not fit the
    budget.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    cfg = canonical(guards)
    if any(not (0 <= u < g.n) for u in cfg):
        raise ValueError("guard position out of range")
    dist = all_pairs_distances(g)
    if not is_distance_k_dominating(dist, cfg, k):
        return False
    if is_connected(g):
        _check_feasible(g.n, len(cfg), budget)
        survivors, stats = _solve_q(g, k, len(cfg), budget, "forward")
        if stats.exceeded:
            raise BudgetExceededError(f"budget {budget} exceeded at q={len(cfg)}")
        return cfg in survivors
    for comp in components(g):
        sub, idmap = induced_subgraph(g, comp)
        part = [idmap[v] for v in cfg if v in idmap]
        if not part:
            return False  # unguarded component
        if not is_eternal_set(sub, k, part, budget):
            return False
    return True


# ---------------------------------------------------------------------------
# Certificates.
# ---------------------------------------------------------------------------

def _build_certificate(g: Graph, k: int, q: int, survivors: frozenset,
                       cap: int) -> EternalCertificate | None:
    """Close the lexicographically least survivor under best responses.

    The response to (member, attack) is the lexicographically smallest
    survivor containing the attack and reachable in one step; closing
    under that choice yields a family that is closed by construction and
    usually far smaller than the full survivor set.  Returns None when
    the closure exceeds ``cap`` members.
    """
    dist = all_pairs_distances(g)
    ordered = sorted(survivors)
    buckets: list[list[Config]] = [[] for _ in range(g.n)]
    for cfg in ordered:
        for v in set(cfg):
            buckets[v].append(cfg)

    family: dict[Config, None] = {}
    response: dict[tuple[Config, int], tuple[Config, tuple]] = {}
    queue = deque([ordered[0]])
    while queue:
        cur = queue.popleft()
        if cur in family:
            continue
        family[cur] = None
        if len(family) > cap:
            return None
        for v in range(g.n):
            for nxt in buckets[v]:
                moves = transform_assignment(dist, cur, nxt, k)
                if moves is not None:
                    break
            else:  # unreachable: survivors form a defense-closed family
                raise AssertionError("survivor cannot answer an attack")
            response[(cur, v)] = (nxt, moves)
            if nxt not in family:
                queue.append(nxt)
    members = sorted(family)
    index = {cfg: i for i, cfg in enumerate(members)}
    packed = {(index[cur], v): (index[nxt], moves)
              for (cur, v), (nxt, moves) in response.items()}
    return EternalCertificate(k, q, tuple(members), packed)


def verify_certificate(g: Graph, cert: EternalCertificate
                       ) -> tuple[bool, CertificateViolation | None]:
    """Re-derive every certificate invariant from scratch.

    Uses only distances and multiset comparisons (never the solver), and
    returns the first violation in (member index, vertex id) scan order.
    Violations are return values, not exceptions.
    """
    dist = all_pairs_distances(g)
    n = g.n

    def bad(state, attack_id, reason):
        attack = g.labels[attack_id] if attack_id is not None else None
        return False, CertificateViolation(state, attack, reason)

    if cert.q < 1 or cert.k < 1:
        return bad(None, None, "q and k must be positive")
    if not cert.family:
        return bad(None, None, "empty family")
    for i, member in enumerate(cert.family):
        if len(member) != cert.q:
            return bad(i, None, f"member {i} has size {len(member)}, expected {cert.q}")
        if any(not (0 <= u < n) for u in member):
            return bad(i, None, f"member {i} names a vertex out of range")
        if tuple(sorted(member)) != tuple(member):
            return bad(i, None, f"member {i} is not in canonical sorted form")
        if not is_distance_k_dominating(dist, member, cert.k):
            return bad(i, None, f"member {i} is not distance-{cert.k} dominating")
    for i, member in enumerate(cert.family):
        for v in range(n):
            entry = cert.response.get((i, v))
            if entry is None:
                return bad(i, v, "missing response")
            j, moves = entry
            if not (0 <= j < len(cert.family)):
                return bad(i, v, f"successor index {j} outside the family")
            if len(moves) != cert.q:
                return bad(i, v, f"{len(moves)} moves for {cert.q} guards")
            sources = tuple(sorted(m[0] for m in moves))
            if sources != member:
                return bad(i, v, "move sources do not match the member")
            for a, b in moves:
                if not (0 <= b < n) or dist[a][b] > cert.k:
                    return bad(i, v, f"move {a}->{b} longer than k={cert.k}")
            targets = tuple(sorted(m[1] for m in moves))
            if targets != cert.family[j]:
                return bad(i, v, "move targets do not match the successor")
            if v not in cert.family[j]:
                return bad(i, v, "successor does not occupy the attacked vertex")
    return True, None


def certificate_to_json(cert: EternalCertificate, g: Graph) -> dict:
    """External JSON form (labels, not ids); see verify/eternal CLI."""
    return {
        "k": cert.k,
        "q": cert.q,
        "family": [[g.labels[u] for u in member] for member in cert.family],
        "response": [
            {
                "state": i,
                "attack": g.labels[v],
                "next": j,
                "moves": [[g.labels[a], g.labels[b]] for a, b in moves],
            }
            for (i, v), (j, moves) in sorted(cert.response.items())
        ],
    }


def certificate_from_json(doc: dict, g: Graph) -> EternalCertificate:
    """Inverse of certificate_to_json; raises ValueError on malformed input."""
    try:
        family = tuple(tuple(sorted(g.id_of(u) for u in member))
                       for member in doc["family"])
        response = {}
        for entry in doc["response"]:
            moves = tuple((g.id_of(a), g.id_of(b)) for a, b in entry["moves"])
            response[(int(entry["state"]), g.id_of(entry["attack"]))] = (
                int(entry["next"]), moves)
        return EternalCertificate(int(doc["k"]), int(doc["q"]), family, response)
    except KeyError as exc:
        raise ValueError(f"certificate document missing field {exc}") from exc
