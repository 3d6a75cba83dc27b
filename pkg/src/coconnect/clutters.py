"""Uniform clutters: the r-connected clutter of a graph, chordality in the
simplicial-subcircuit sense, and matching invariants.

A d-uniform clutter is a vertex universe plus a family of distinct size-d
circuits. Universe vertices belonging to no circuit are retained: deletion
keeps the vertex set fixed, only circuits disappear.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .bitset import iter_bits, k_submasks, members
from .errors import BoundExceeded
from .graphs import Graph, connected_ksubsets_within

MATCHING_CIRCUIT_BOUND = 10**4


@dataclass(frozen=True)
class Clutter:
    n: int
    d: int
    circuits: tuple[int, ...]

    def __post_init__(self) -> None:
        seen = set()
        prev = None
        for c in self.circuits:
            if c.bit_count() != self.d:
                raise ValueError(f"circuit {members(c)} is not {self.d}-uniform")
            if c >> self.n:
                raise ValueError(f"circuit {members(c)} escapes the universe")
            if c in seen:
                raise ValueError(f"duplicate circuit {members(c)}")
            seen.add(c)
            if prev is not None and members(prev) > members(c):
                raise ValueError("circuits not sorted; use make_clutter")
            prev = c

    def circuit_count(self) -> int:
        return len(self.circuits)


def make_clutter(n: int, d: int, circuits) -> Clutter:
    uniq = sorted(set(circuits), key=members)
    return Clutter(n, d, tuple(uniq))


def con_r(g: Graph, r: int) -> Clutter:
    """The r-connected clutter: circuits are the size-r vertex sets that
    induce connected subgraphs."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return Clutter(g.n, r, tuple(connected_ksubsets_within(g.adj, g.vertex_mask, r)))


def complement_clutter(h: Clutter) -> Clutter:
    have = set(h.circuits)
    rest = [c for c in k_submasks((1 << h.n) - 1, h.d) if c not in have]
    return make_clutter(h.n, h.d, rest)


def deletion_d(h: Clutter, w: int) -> Clutter:
    """Drop every circuit containing ``w``; the universe stays put."""
    return Clutter(h.n, h.d, tuple(c for c in h.circuits if w & ~c))


def open_neighborhood(h: Clutter, b: int) -> int:
    """Vertices x outside ``b`` with some circuit inside b + x through x."""
    out = 0
    for c in h.circuits:
        extra = c & ~b
        if extra and extra & (extra - 1) == 0:  # exactly one vertex outside b
            out |= extra
    return out


def is_clique(h: Clutter, w: int, _circuit_set=None) -> bool:
    """Every d-subset of ``w`` is a circuit (vacuous when |w| < d)."""
    have = _circuit_set if _circuit_set is not None else set(h.circuits)
    return all(sub in have for sub in k_submasks(w, h.d))


def simplicial_maximal_subcircuits(h: Clutter) -> list[int]:
    """All (d-1)-subsets of circuits whose closed neighborhood is a clique."""
    have = set(h.circuits)
    cands = set()
    for c in h.circuits:
        for v in iter_bits(c):
            cands.add(c & ~(1 << v))
    out = []
    for z in cands:
        closed = z | open_neighborhood(h, z)
        if is_clique(h, closed, have):
            out.append(z)
    return sorted(out, key=members)


def _simplicial_in_state(z: int, state_circuits: list[int], have: set[int], d: int) -> bool:
    closed = z
    for c in state_circuits:
        extra = c & ~z
        if extra and extra & (extra - 1) == 0:
            closed |= extra
    return all(sub in have for sub in k_submasks(closed, d))


class _SearchBudget(Exception):
    pass


def _elimination_search(
    d: int, circuits: tuple[int, ...], budget: int | None
) -> tuple[bool | None, tuple[int, ...] | None]:
    """Depth-first elimination search with memoized failed states.

    States are subsets of the original circuit list, keyed as index
    bitmasks, since deletion only ever removes circuits. Candidates are
    tried by ascending closed neighborhood, with the clique test run lazily
    (a closed neighborhood W is a clique iff the number of surviving
    circuits inside W equals the number of d-subsets of W). Greedy
    elimination is not assumed to be confluent. Returns (None, None) when
    the node budget runs out before a decision.
    """
    from math import comb

    m = len(circuits)
    if m == 0:
        return True, ()
    containing: dict[int, int] = {}
    for i, c in enumerate(circuits):
        for v in iter_bits(c):
            z = c & ~(1 << v)
            containing[z] = containing.get(z, 0) | (1 << i)
    z_list = sorted(containing, key=members)
    failed: set[int] = set()
    seq: list[int] = []
    nodes = 0
    limit = sys.getrecursionlimit()
    if limit < m + 200:
        sys.setrecursionlimit(m + 400)

    def dfs(state: int) -> bool:
        nonlocal nodes
        if state == 0:
            return True
        if state in failed:
            return False
        nodes += 1
        if budget is not None and nodes > budget:
            raise _SearchBudget
        live = [circuits[i] for i in iter_bits(state)]
        cands = []
        for z in z_list:
            star = containing[z] & state
            if not star:
                continue
            closed = z
            for i in iter_bits(star):
                closed |= circuits[i]
            cands.append((closed.bit_count(), members(z), z, closed))
        cands.sort()
        for _, _, z, closed in cands:
            inside = sum(1 for c in live if not c & ~closed)
            if inside != comb(closed.bit_count(), d):
                continue  # closed neighborhood is not a clique
            seq.append(z)
            if dfs(state & ~containing[z]):
                return True
            seq.pop()
        failed.add(state)
        return False

    try:
        ok = dfs((1 << m) - 1)
    except _SearchBudget:
        return None, None
    return (True, tuple(seq)) if ok else (False, None)


_CHORDAL_CACHE: dict[tuple[int, tuple[int, ...]], bool] = {}

CHORDAL_STAGE_BUDGET = 4000


def clear_caches() -> None:
    _CHORDAL_CACHE.clear()


def _chordal_decide(d: int, circuits: tuple[int, ...]) -> bool:
    """Chordality decision with a hereditary fallback.

    A budgeted direct search settles almost every input. When it runs out,
    single-vertex induced subclutters are decided recursively: an induced
    subclutter of a chordal clutter is chordal (the elimination sequence
    restricts, step by step, to any vertex subset), so one non-chordal
    subclutter refutes the whole input; only if every subclutter is chordal
    does the direct search resume without a budget.
    """
    key = (d, circuits)
    hit = _CHORDAL_CACHE.get(key)
    if hit is not None:
        return hit
    status, _ = _elimination_search(d, circuits, CHORDAL_STAGE_BUDGET)
    if status is None:
        support = 0
        for c in circuits:
            support |= c
        for v in iter_bits(support):
            sub = tuple(c for c in circuits if not c >> v & 1)
            if not _chordal_decide(d, sub):
                _CHORDAL_CACHE[key] = False
                return False
        status, _ = _elimination_search(d, circuits, None)
    _CHORDAL_CACHE[key] = bool(status)
    return bool(status)


def is_chordal_clutter(h: Clutter) -> tuple[bool, tuple[int, ...] | None]:
    """Decide chordality; on success return an elimination certificate."""
    if not _chordal_decide(h.d, h.circuits):
        return False, None
    status, seq = _elimination_search(h.d, h.circuits, None)
    assert status
    return True, seq


def verify_elimination(h: Clutter, subcircuits) -> tuple[bool, int | None]:
    """Replay an elimination sequence.

    True iff each step is a simplicial maximal subcircuit of the current
    clutter and the final circuit set is empty; on failure the offending
    step index (or the length, when circuits remain) comes back.
    """
    state = list(h.circuits)
    for i, z in enumerate(subcircuits):
        if z.bit_count() != h.d - 1:
            return False, i
        if not any(z & ~c == 0 for c in state):
            return False, i
        have = set(state)
        if not _simplicial_in_state(z, state, have, h.d):
            return False, i
        state = [c for c in state if z & ~c]
    if state:
        return False, len(tuple(subcircuits))
    return True, None


def matching_numbers(h: Clutter, circuit_bound: int = MATCHING_CIRCUIT_BOUND) -> tuple[int, int]:
    """Exact matching number and induced matching number.

    Branch and bound over families of pairwise disjoint circuits; the
    induced variant additionally rejects any family whose vertex support
    contains a stray circuit (subsets of induced matchings stay induced, so
    the incremental rejection is safe).
    """
    m = len(h.circuits)
    if m > circuit_bound:
        raise BoundExceeded(f"matching_numbers capped at {circuit_bound} circuits, got {m}")
    circuits = h.circuits

    def search(induced: bool) -> int:
        best = 0

        def rec(start: int, used: int, size: int) -> None:
            nonlocal best
            if size > best:
                best = size
            # crude bound: every remaining circuit costs d fresh vertices
            remaining = sum(1 for i in range(start, m) if not circuits[i] & used)
            if size + remaining <= best:
                return
            for i in range(start, m):
                c = circuits[i]
                if c & used:
                    continue
                if induced:
                    support = used | c
                    ok = True
                    for e in circuits:
                        if e != c and not e & ~support and e & c:
                            ok = False
                            break
                        # e fully inside old support was rejected earlier
                    if not ok:
                        continue
                rec(i + 1, used | c, size + 1)

        rec(0, 0, 0)
        return best

    return search(False), search(True)


def induced_matching_pair(h: Clutter) -> tuple[int, int] | None:
    """A pair of circuits forming an induced matching, if one exists."""
    circuits = h.circuits
    for i, c1 in enumerate(circuits):
        for c2 in circuits[i + 1 :]:
            if c1 & c2:
                continue
            support = c1 | c2
            if not any(e != c1 and e != c2 and not e & ~support for e in circuits):
                return c1, c2
    return None


def is_r_gap_free(g: Graph, r: int) -> tuple[bool, tuple[int, int] | None]:
    """Whether the r-connected clutter has induced matching number <= 1;
    on failure the witness pair comes back."""
    pair = induced_matching_pair(con_r(g, r))
    return (pair is None), pair
