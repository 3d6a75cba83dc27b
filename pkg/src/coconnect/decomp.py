"""Shedding vertices, vertex decomposability, and shellability.

Three equivalent shedding tests are kept side by side on purpose: the
facet-level definition for arbitrary complexes, the support-exchange test
for co-connected complexes, and the neighborhood-emptiness test for the
A-empty case. Their agreement is enforced by tests, never assumed by the
checkers.

The searches (vertex decomposability, shellability, the vertex-ordering
route) are exact depth-first searches with memoized failed states. Whether
a facet may extend a partial shelling depends only on the set of placed
facets, not their order, which turns the shelling state space from
factorial into subset-sized.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .bitset import iter_bits, mask_of, members
from .complexes import SimplicialComplex, make_complex, reduce_to_maximal
from .errors import BoundExceeded
from .graphs import Graph, has_connected_ksubset
from .complexes import supp_r

SHELLING_FACET_BOUND = 30
VD_FACET_BOUND = 4096


@dataclass(frozen=True)
class SheddingOrder:
    """Vertex ordering certifying vertex decomposability of a co-connected
    complex via the A-empty criterion; replayable step by step."""

    vertices: tuple[int, ...]

    def to_json(self, one_indexed: bool = False) -> str:
        shift = 1 if one_indexed else 0
        doc = {"kind": "shedding_order", "vertices": [v + shift for v in self.vertices]}
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class ShellingOrder:
    facets: tuple[int, ...]

    def to_json(self, one_indexed: bool = False) -> str:
        shift = 1 if one_indexed else 0
        doc = {
            "kind": "shelling_order",
            "facets": [[v + shift for v in members(f)] for f in self.facets],
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# shedding predicates


def is_shedding_generic(d: SimplicialComplex, x: int) -> bool:
    """Facet-level test: every facet of del(x) must be a facet of d.

    Facets not containing x survive deletion untouched, so the test reduces
    to: every facet through x, with x removed, sits inside a facet that
    avoids x.
    """
    if not d.ground >> x & 1:
        raise ValueError(f"vertex {x} is outside the ground set")
    bit = 1 << x
    without = [f for f in d.facets if not f & bit]
    for f in d.facets:
        if f & bit and not any((f & ~bit) & ~g == 0 for g in without):
            return False
    return True


def is_shedding_supp(g: Graph, a: int, r: int, x: int) -> bool:
    """Support-exchange test: every support set avoiding x must trade one of
    its vertices for x and stay a support set."""
    supports = supp_r(g, a, r)
    have = set(supports)
    bit = 1 << x
    for f in supports:
        if f & bit:
            continue
        if not any((f & ~(1 << y)) | bit in have for y in iter_bits(f)):
            return False
    return True


def is_shedding_conr(g: Graph, r: int, x: int) -> bool:
    """A-empty shortcut: x sheds iff the graph minus N[x] carries no
    connected r-subset."""
    inside = g.vertex_mask & ~(g.adj[x] | (1 << x))
    return not has_connected_ksubset(g.adj, inside, r)


# ---------------------------------------------------------------------------
# vertex decomposability


_VD_CACHE: dict[tuple[int, ...], tuple[bool, dict | None]] = {}


def clear_caches() -> None:
    _VD_CACHE.clear()
    _SHELL_DECISION_CACHE.clear()


def _facets_json(facets) -> list:
    return [list(members(f)) for f in facets]


def _vd_search(facets: tuple[int, ...]) -> tuple[bool, dict | None]:
    hit = _VD_CACHE.get(facets)
    if hit is not None:
        return hit
    if not facets:
        result = (True, {"base": "void"})
    elif facets == (0,):
        result = (True, {"base": "empty"})
    elif len(facets) == 1:
        result = (True, {"base": "simplex", "facets": _facets_json(facets)})
    else:
        verts = 0
        for f in facets:
            verts |= f
        cands: list[tuple[int, int, list[int], list[int]]] = []
        for x in iter_bits(verts):
            bit = 1 << x
            without = [f for f in facets if not f & bit]
            with_x = [f for f in facets if f & bit]
            if all(any((f & ~bit) & ~g == 0 for g in without) for f in with_x):
                cands.append((len(without), x, with_x, without))
        cands.sort(key=lambda t: (t[0], t[1]))
        result = (False, None)
        for _, x, with_x, without in cands:
            bit = 1 << x
            link_facets = tuple(sorted((f & ~bit for f in with_x), key=members))
            ok_link, tree_link = _vd_search(link_facets)
            if not ok_link:
                continue
            ok_del, tree_del = _vd_search(tuple(without))
            if ok_del:
                result = (True, {"shed": x, "link": tree_link, "del": tree_del})
                break
    _VD_CACHE[facets] = result
    return result


def is_vertex_decomposable(
    d: SimplicialComplex, facet_bound: int = VD_FACET_BOUND
) -> tuple[bool, dict | None]:
    """Recursive shedding-vertex search with memoized subcomplexes.

    Void, empty, and simplex complexes are vertex decomposable by
    convention. On success the decomposition tree comes back as a JSON-able
    nesting of {shed, link, del} nodes.
    """
    if len(d.facets) > facet_bound:
        raise BoundExceeded(f"vertex decomposability capped at {facet_bound} facets")
    ok, tree = _vd_search(d.facets)
    return ok, tree


def vd_tree_to_json(tree: dict) -> str:
    return json.dumps({"kind": "vd_tree", "tree": tree}, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# the vertex-ordering criterion for co-connected complexes


def _count_connected_capped(adj, inside: int, k: int, cap: int) -> int:
    """Number of connected k-subsets inside a mask, stopping at ``cap``."""
    count = 0

    def extend(sub: int, ext: int, closed: int, floor_excl: int) -> bool:
        nonlocal count
        if sub.bit_count() == k:
            count += 1
            return count >= cap
        rest = ext
        while rest:
            low = rest & -rest
            rest ^= low
            w = low.bit_length() - 1
            new_nbrs = adj[w] & inside & ~closed & floor_excl
            if extend(sub | low, rest | new_nbrs, closed | new_nbrs | low, floor_excl):
                return True
        return False

    for v in iter_bits(inside):
        floor_excl = ~((1 << (v + 1)) - 1)
        start_ext = adj[v] & inside & floor_excl
        if extend(1 << v, start_ext, start_ext | (1 << v), floor_excl):
            break
    return count


def vd_sigma_via_ordering(g: Graph, r: int) -> tuple[bool, SheddingOrder | None]:
    """Decide vertex decomposability of the A-empty co-connected complex by
    searching for a shedding vertex ordering on the graph itself.

    Each accepted vertex must empty the r-connected clutter of the current
    graph minus its closed neighborhood; only the link branch recurses (the
    deletion branch is covered by the nonempty-A decomposability theorem),
    which is the whole speedup over the generic search. Failed residual
    graphs are memoized by their vertex mask.
    """
    if r < 2:
        raise ValueError("the ordering criterion needs r >= 2")
    adj = g.adj
    failed: set[int] = set()
    order: list[int] = []

    def dfs(mask: int) -> bool:
        if _count_connected_capped(adj, mask, r, 2) <= 1:
            return True
        if mask in failed:
            return False
        for x in iter_bits(mask):
            residual = mask & ~((adj[x] & mask) | (1 << x))
            if has_connected_ksubset(adj, residual, r):
                continue
            order.append(x)
            if dfs(mask & ~(1 << x)):
                return True
            order.pop()
        failed.add(mask)
        return False

    ok = dfs(g.vertex_mask)
    return (ok, SheddingOrder(tuple(order))) if ok else (False, None)


def verify_shedding_order(g: Graph, r: int, vertices) -> tuple[bool, int | None]:
    """Replay a shedding ordering: every step must empty the r-connected
    clutter of the residual graph minus the vertex's closed neighborhood,
    and at most one connected r-subset may survive at the end."""
    adj = g.adj
    mask = g.vertex_mask
    for i, x in enumerate(vertices):
        if not mask >> x & 1:
            return False, i
        residual = mask & ~((adj[x] & mask) | (1 << x))
        if has_connected_ksubset(adj, residual, r):
            return False, i
        mask &= ~(1 << x)
    if _count_connected_capped(adj, mask, r, 2) > 1:
        return False, len(tuple(vertices))
    return True, None


# ---------------------------------------------------------------------------
# shellability


def _last_position_ok(i: int, work: list[int], s: int) -> bool:
    f = work[i]
    others = [work[j] for j in range(s) if j != i]
    size = f.bit_count()
    for g in others:
        gf = g & f
        if not any((h & f).bit_count() == size - 1 and gf & ~(h & f) == 0 for h in others):
            return False
    return True


def _pure_h_vector(facets: tuple[int, ...]) -> list[int] | None:
    """h-vector of a pure complex, or None when the face count is awkward.

    In any shelling of a pure complex the new faces contributed by each
    facet form a boolean interval, and h_k counts the facets whose interval
    bottom has size k; a negative entry therefore rules shellability out
    before any search starts.
    """
    from math import comb

    d = facets[0].bit_count()
    if d > 20:
        return None
    counts = [0] * (d + 1)
    seen: set[int] = set()
    from .bitset import submasks

    for fac in facets:
        for sub in submasks(fac):
            if sub not in seen:
                seen.add(sub)
                counts[sub.bit_count()] += 1
    h = []
    for k in range(d + 1):
        h.append(sum((-1) ** (k - i) * comb(d - i, k - i) * counts[i] for i in range(k + 1)))
    return h


_SHELL_DECISION_CACHE: dict[tuple[int, ...], bool] = {}

_LINK_FILTER_THRESHOLD = 24


def find_shelling(
    d: SimplicialComplex, facet_bound: int = SHELLING_FACET_BOUND
) -> tuple[bool, ShellingOrder | None]:
    """Exhaustive shelling search.

    Depth-first placement with the failed placed-sets memoized as facet
    index masks. A facet f extends a placed set S iff every placed facet g
    admits a placed h with g cap f inside h cap f of codimension one in f;
    with M(f, S) the set of vertices v of f for which some placed facet
    meets f in exactly f minus v, that is equivalent to: no placed g
    contains M(f, S). Before the search three sound rejections run: cone
    vertices are stripped, a pure complex with a negative h-vector entry is
    refused outright, some facet must fit in the final position, and on
    larger inputs every vertex link must itself be shellable (links inherit
    shellings, and a link failure is found by a much smaller search).
    """
    facets = d.facets
    s = len(facets)
    if s == 0:
        return True, ShellingOrder(())
    if s == 1:
        return True, ShellingOrder(facets)
    if s > facet_bound:
        raise BoundExceeded(f"shelling search capped at {facet_bound} facets, got {s}")
    common = facets[0]
    for f in facets:
        common &= f
    work = [f & ~common for f in facets]
    if len({f.bit_count() for f in work}) == 1:
        h = _pure_h_vector(tuple(work))
        if h is not None and any(x < 0 for x in h):
            _SHELL_DECISION_CACHE[facets] = False
            return False, None
    if not any(_last_position_ok(i, work, s) for i in range(s)):
        _SHELL_DECISION_CACHE[facets] = False
        return False, None
    if s > _LINK_FILTER_THRESHOLD and not _links_shellable(work, facet_bound):
        _SHELL_DECISION_CACHE[facets] = False
        return False, None
    # per-facet exchange directions: dirs[i][v] = indices h with h#f_i = f_i minus v
    verts_of = [members(f) for f in work]
    dirs: list[dict[int, int]] = []
    adj_mask = [0] * s
    for i, f in enumerate(work):
        size = f.bit_count()
        dd: dict[int, int] = {}
        for j, h in enumerate(work):
            if j == i:
                continue
            hf = h & f
            if hf.bit_count() == size - 1:
                v = (f & ~hf).bit_length() - 1
                dd[v] = dd.get(v, 0) | (1 << j)
                adj_mask[i] |= 1 << j
        dirs.append(dd)
    full = (1 << s) - 1
    failed: set[int] = set()
    order: list[int] = []

    def dfs(smask: int) -> bool:
        if smask == full:
            return True
        if smask in failed:
            return False
        cands: list[tuple[int, int]] = []
        for i in range(s):
            if smask >> i & 1:
                continue
            if smask == 0:
                cands.append((0, i))
                continue
            m = 0
            dd = dirs[i]
            for v in verts_of[i]:
                hmask = dd.get(v, 0)
                if hmask & smask:
                    m |= 1 << v
            if not m:
                continue
            ok = True
            rest = smask
            while rest:
                low = rest & -rest
                rest ^= low
                if not m & ~work[low.bit_length() - 1]:
                    ok = False
                    break
            if ok:
                cands.append((-(adj_mask[i] & smask).bit_count(), i))
        cands.sort()
        for _, i in cands:
            order.append(i)
            if dfs(smask | (1 << i)):
                return True
            order.pop()
        failed.add(smask)
        return False

    ok = dfs(0)
    _SHELL_DECISION_CACHE[facets] = ok
    if not ok:
        return False, None
    return True, ShellingOrder(tuple(facets[i] for i in order))


def _links_shellable(work: list[int], facet_bound: int) -> bool:
    """Necessary condition: the link of every vertex must be shellable."""
    verts = 0
    for f in work:
        verts |= f
    for v in iter_bits(verts):
        bit = 1 << v
        lk_facets = tuple(sorted((f & ~bit for f in work if f & bit), key=members))
        if len(lk_facets) < 2:
            continue
        cached = _SHELL_DECISION_CACHE.get(lk_facets)
        if cached is False:
            return False
        if cached is True:
            continue
        verts_lk = 0
        for f in lk_facets:
            verts_lk |= f
        ok, _ = find_shelling(SimplicialComplex(verts_lk, lk_facets), facet_bound)
        if not ok:
            return False
    return True


def verify_shelling(d: SimplicialComplex, order) -> tuple[bool, int | None]:
    """Check the prefix condition at every position of a candidate order.

    The order must be a permutation of the facets; a violated prefix comes
    back as its (0-based) index.
    """
    seq = tuple(order.facets if isinstance(order, ShellingOrder) else order)
    if tuple(sorted(seq, key=members)) != d.facets:
        raise ValueError("order is not a permutation of the facets")
    for i in range(1, len(seq)):
        f = seq[i]
        size = f.bit_count()
        prev = seq[:i]
        for g in prev:
            gf = g & f
            if not any((h & f).bit_count() == size - 1 and gf & ~(h & f) == 0 for h in prev):
                return False, i
    return True, None


def shedding_vertices(d: SimplicialComplex) -> int:
    """Mask of the complex vertices passing the facet-level shedding test."""
    out = 0
    for x in iter_bits(d.vertices()):
        if is_shedding_generic(d, x):
            out |= 1 << x
    return out
