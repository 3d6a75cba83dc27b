"""Finite simple graphs on dense integer vertices, plus the graph families
and structural predicates the rest of the engine relies on.

Conventions
-----------
Vertices are exactly ``0..n-1``. Adjacency is stored as one bitmask per
vertex (see :mod:`coconnect.bitset`). Graph values are immutable after
construction and every operation here is a pure function, so they are safe
to share across threads, worker processes, and memo tables.

Figures and examples from the literature use 1-based labels ``x_1..x_n``;
those are shifted by -1 at the I/O boundary (see :mod:`coconnect.fixtures`
and the ``--one-indexed`` CLI flag), never inside the engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bitset import iter_bits, k_submasks, mask_of, members, universe
from .errors import BoundExceeded

CANONICAL_KEY_BOUND = 9


@dataclass(frozen=True)
class Graph:
    """Simple graph: vertex count plus per-vertex neighbor bitmasks."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError("adjacency length differs from vertex count")
        full = universe(self.n)
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {{{u},{v}}}")

    @property
    def vertex_mask(self) -> int:
        return universe(self.n)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return members(self.adj[v])

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for v in range(self.n):
            for u in iter_bits(self.adj[v]):
                if u > v:
                    out.append((v, u))
        return tuple(out)

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)


def from_edge_list(n: int, edges) -> Graph:
    """Graph with exactly the given edges; duplicates collapse."""
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {{{u},{v}}} out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple((full & ~a) & ~(1 << v) for v, a in enumerate(g.adj)))


def induced(g: Graph, w: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on mask ``w``, relabeled to ``0..|w|-1``.

    Returns the relabeled graph together with the ascending tuple of the
    original vertex ids (position = new id).
    """
    if w & ~g.vertex_mask:
        raise ValueError("induced set is not a subset of the vertices")
    old = members(w)
    pos = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        adj.append(mask_of(pos[u] for u in iter_bits(g.adj[v] & w)))
    return Graph(len(old), tuple(adj)), old


def neighborhood(g: Graph, b: int, closed: bool = False) -> int:
    """Open neighborhood N(B) of the mask ``b``, or N[B] when ``closed``."""
    if b & ~g.vertex_mask:
        raise ValueError("set is not a subset of the vertices")
    nb = 0
    for v in iter_bits(b):
        nb |= g.adj[v]
    return nb | b if closed else nb & ~b


def _component_of(adj: tuple[int, ...], inside: int, start: int) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= adj[v] & inside
        frontier = grow & ~comp
        comp |= frontier
    return comp


def components_within(adj: tuple[int, ...], inside: int) -> list[int]:
    """Connected components of the induced subgraph on mask ``inside``,
    as masks sorted by least element."""
    out = []
    rest = inside
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = _component_of(adj, rest, start)
        out.append(comp)
        rest &= ~comp
    return out


def connected_components(g: Graph) -> list[int]:
    return components_within(g.adj, g.vertex_mask)


def is_connected_within(adj: tuple[int, ...], w: int) -> bool:
    """Whether the induced subgraph on mask ``w`` is connected.

    The empty set counts as connected; callers that need the nonempty
    convention check emptiness themselves.
    """
    if w == 0:
        return True
    start = (w & -w).bit_length() - 1
    return _component_of(adj, w, start) == w


def is_connected(g: Graph) -> bool:
    return is_connected_within(g.adj, g.vertex_mask)


def non_cut_vertices(g: Graph) -> int:
    """Mask of vertices whose removal keeps the graph connected."""
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    out = 0
    full = g.vertex_mask
    for v in range(g.n):
        if is_connected_within(g.adj, full & ~(1 << v)):
            out |= 1 << v
    return out


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    adj = list(g1.adj) + [a << g1.n for a in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj))


def join(g1: Graph, g2: Graph) -> Graph:
    n1, n2 = g1.n, g2.n
    left = universe(n1)
    right = universe(n2) << n1
    adj = [a | right for a in g1.adj]
    adj += [(a << n1) | left for a in g2.adj]
    return Graph(n1 + n2, tuple(adj))


def product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product; vertex (u, v) gets id ``u * g2.n + v``."""
    n1, n2 = g1.n, g2.n
    adj = [0] * (n1 * n2)
    for u in range(n1):
        for v in range(n2):
            i = u * n2 + v
            for w in iter_bits(g2.adj[v]):
                adj[i] |= 1 << (u * n2 + w)
            for w in iter_bits(g1.adj[u]):
                adj[i] |= 1 << (w * n2 + v)
    return Graph(n1 * n2, tuple(adj))


# ---------------------------------------------------------------------------
# graph families


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return from_edge_list(n, itertools.combinations(range(n), 2))


def ladder_graph(n: int) -> Graph:
    """P_n x P_2; vertex (i, j) has id 2*i + j."""
    return product(path_graph(n), path_graph(2))


def grid3_graph(n: int) -> Graph:
    """P_n x P_3; vertex (i, j) has id 3*i + j."""
    return product(path_graph(n), path_graph(3))


def cycle_complement_graph(n: int) -> Graph:
    return complement(cycle_graph(n))


def unicyclic_graph(r: int) -> Graph:
    """The unicyclic family: an (r+2)-cycle with a pendant leaf attached to
    every odd-position cycle vertex.

    Cycle vertices are 0..r+1 (0-based); the leaf hanging off cycle vertex
    j (j even 0-based, i.e. odd 1-based) gets the next free id.
    """
    if r < 3:
        raise ValueError("unicyclic family needs r >= 3")
    cyc = r + 2
    edges = [(i, i + 1) for i in range(cyc - 1)] + [(cyc - 1, 0)]
    nxt = cyc
    for j in range(0, cyc, 2):
        edges.append((j, nxt))
        nxt += 1
    return from_edge_list(nxt, edges)


def cograph_from_cotree(tree) -> Graph:
    """Build a cograph from a cotree.

    A cotree is the leaf marker ``"."`` or a tuple ``("U", t1, t2, ...)`` /
    ``("J", t1, t2, ...)`` for disjoint union / join of at least two
    subtrees.
    """
    if tree == ".":
        return complete_graph(1)
    if not isinstance(tree, tuple) or len(tree) < 3 or tree[0] not in ("U", "J"):
        raise ValueError(f"bad cotree node: {tree!r}")
    op = disjoint_union if tree[0] == "U" else join
    g = cograph_from_cotree(tree[1])
    for sub in tree[2:]:
        g = op(g, cograph_from_cotree(sub))
    return g


def parse_cotree(text: str):
    """Parse ``"J(U(.,.),.)"``-style cotree strings."""
    pos = 0

    def node():
        nonlocal pos
        if pos >= len(text):
            raise ValueError("truncated cotree")
        c = text[pos]
        if c == ".":
            pos += 1
            return "."
        if c in "UJ":
            op = c
            pos += 1
            if pos >= len(text) or text[pos] != "(":
                raise ValueError(f"expected '(' at {pos}")
            pos += 1
            subs = [node()]
            while pos < len(text) and text[pos] == ",":
                pos += 1
                subs.append(node())
            if pos >= len(text) or text[pos] != ")":
                raise ValueError(f"expected ')' at {pos}")
            pos += 1
            if len(subs) < 2:
                raise ValueError("U/J need at least two children")
            return (op, *subs)
        raise ValueError(f"unexpected {c!r} at {pos}")

    out = node()
    if pos != len(text.strip()):
        raise ValueError("trailing characters after cotree")
    return out


FAMILIES = ("path", "cycle", "complete", "ladder", "grid3", "cycle_complement", "unicyclic", "cograph")


def family(name: str, param) -> Graph:
    """Named family dispatcher used by the CLI and the theorem harness."""
    if name == "path":
        return path_graph(int(param))
    if name == "cycle":
        return cycle_graph(int(param))
    if name == "complete":
        return complete_graph(int(param))
    if name == "ladder":
        return ladder_graph(int(param))
    if name == "grid3":
        return grid3_graph(int(param))
    if name == "cycle_complement":
        return cycle_complement_graph(int(param))
    if name == "unicyclic":
        return unicyclic_graph(int(param))
    if name == "cograph":
        tree = parse_cotree(param) if isinstance(param, str) else param
        return cograph_from_cotree(tree)
    raise ValueError(f"unknown family {name!r}")


# ---------------------------------------------------------------------------
# structural predicates


def simplicial_vertices(g: Graph) -> int:
    """Mask of vertices whose closed neighborhood is a clique."""
    out = 0
    for v in range(g.n):
        nb = g.adj[v]
        if all(g.adj[u] & nb & ~(1 << u) == nb & ~(1 << u) for u in iter_bits(nb)):
            out |= 1 << v
    return out


def is_chordal(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Chordality via maximum cardinality search.

    Returns (True, perfect elimination ordering) or (False, None). The
    ordering lists vertices in elimination order, earliest first; ties in
    the MCS weight break toward the smallest id so the certificate is
    deterministic.
    """
    n = g.n
    if n == 0:
        return True, ()
    weight = [0] * n
    numbered = 0
    order = []  # filled in reverse elimination order
    for _ in range(n):
        best, best_w = -1, -1
        for v in range(n):
            if not numbered >> v & 1 and weight[v] > best_w:
                best, best_w = v, weight[v]
        order.append(best)
        numbered |= 1 << best
        for u in iter_bits(g.adj[best] & ~numbered):
            weight[u] += 1
    elim = tuple(reversed(order))
    # PEO check: later neighbors of each vertex must form a clique
    pos = {v: i for i, v in enumerate(elim)}
    for i, v in enumerate(elim):
        later = mask_of(u for u in iter_bits(g.adj[v]) if pos[u] > i)
        for u in iter_bits(later):
            if later & ~(g.adj[u] | (1 << u)):
                return False, None
    return True, elim


def is_cochordal(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    return is_chordal(complement(g))


def is_cograph(g: Graph) -> tuple[bool, object]:
    """Cograph recognition by the union/join decomposition.

    On success the second slot is the cotree with labeled leaves:
    ``("v", id)`` / ``("U", ...)`` / ``("J", ...)``.
    """

    def rec(w: int):
        verts = members(w)
        if len(verts) == 1:
            return ("v", verts[0])
        comps = components_within(g.adj, w)
        if len(comps) > 1:
            subs = [rec(c) for c in comps]
            if any(s is None for s in subs):
                return None
            return ("U", *subs)
        co_adj = tuple((w & ~a) & ~(1 << v) if w >> v & 1 else 0 for v, a in enumerate(g.adj))
        cocomps = components_within(co_adj, w)
        if len(cocomps) > 1:
            subs = [rec(c) for c in cocomps]
            if any(s is None for s in subs):
                return None
            return ("J", *subs)
        return None

    if g.n == 0:
        return True, None
    tree = rec(g.vertex_mask)
    return (tree is not None), tree


# ---------------------------------------------------------------------------
# connected subset enumeration

def connected_ksubsets_within(adj: tuple[int, ...], inside: int, k: int) -> list[int]:
    """All k-subsets of ``inside`` whose induced subgraph is connected.

    Grows each set from its minimum vertex using only larger ids, extending
    by unexplored boundary vertices, so every set is produced exactly once.
    Output is sorted by ascending member tuple.
    """
    if k < 1:
        raise ValueError("subset size must be >= 1")
    out = []

    def extend(sub: int, ext: int, closed: int, floor_excl: int) -> None:
        if sub.bit_count() == k:
            out.append(sub)
            return
        rest = ext
        while rest:
            low = rest & -rest
            rest ^= low
            w = low.bit_length() - 1
            new_nbrs = adj[w] & inside & ~closed & floor_excl
            extend(sub | low, rest | new_nbrs, closed | new_nbrs | low, floor_excl)

    for v in iter_bits(inside):
        floor_excl = ~((1 << (v + 1)) - 1)  # ids strictly above v
        start_ext = adj[v] & inside & floor_excl
        extend(1 << v, start_ext, start_ext | (1 << v), floor_excl)
    return sorted(out, key=members)


def connected_ksubsets_by_filter(adj: tuple[int, ...], inside: int, k: int) -> list[int]:
    """Brute-force cross-check path: filter all k-subsets for connectivity."""
    if k < 1:
        raise ValueError("subset size must be >= 1")
    return [w for w in k_submasks(inside, k) if is_connected_within(adj, w)]


def enumerate_connected_subsets(g: Graph, r: int) -> list[int]:
    return connected_ksubsets_within(g.adj, g.vertex_mask, r)


def has_connected_ksubset(adj: tuple[int, ...], inside: int, k: int) -> bool:
    """Early-exit test used by the shedding predicates."""
    if k < 1:
        raise ValueError("subset size must be >= 1")
    if inside.bit_count() < k:
        return False
    for comp in components_within(adj, inside):
        if comp.bit_count() >= k:
            return True
    return False


# ---------------------------------------------------------------------------
# canonical form


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Stable ordered-partition refinement by neighbor-cell multisets."""
    while True:
        color = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                color[v] = ci
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                key = tuple(sorted(color[u] for u in iter_bits(adj[v])))
                sig.setdefault(key, []).append(v)
            if len(sig) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(sig):
                    new_cells.append(sig[key])
        cells = new_cells
        if not changed:
            return cells


def _code_for(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        rows.append(mask_of(pos[u] for u in iter_bits(adj[v])))
    return tuple(rows)


def canonical_key(g: Graph, bound: int = CANONICAL_KEY_BOUND) -> bytes:
    """Isomorphism-invariant key via individualization-refinement.

    Equal keys iff isomorphic. The permutation search is pruned by the
    degree-refined partition; capped at small n because the scan harness is
    the only consumer (larger inputs come pre-deduplicated as graph6).
    """
    if g.n > bound:
        raise BoundExceeded(f"canonical_key capped at n <= {bound}, got {g.n}")
    n = g.n
    if n == 0:
        return b"\x00"
    start = _refine(g.adj, [sorted(range(n), key=lambda v: (g.degree(v), v))])
    # split the initial cells by degree so only degree-respecting maps survive
    cells0: list[list[int]] = []
    for cell in start:
        by_deg: dict[int, list[int]] = {}
        for v in cell:
            by_deg.setdefault(g.degree(v), []).append(v)
        for d in sorted(by_deg):
            cells0.append(by_deg[d])
    best: tuple[int, ...] | None = None

    def rec(cells: list[list[int]]) -> None:
        nonlocal best
        cells = _refine(g.adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            code = _code_for(g.adj, [c[0] for c in cells])
            if best is None or code < best:
                best = code
            return
        cell = cells[target]
        for v in cell:
            branch = cells[:target] + [[v], [u for u in cell if u != v]] + cells[target + 1 :]
            rec(branch)

    rec(cells0)
    assert best is not None
    body = bytearray([n])
    acc = 0
    bits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (best[i] >> j & 1)
            bits += 1
            if bits == 8:
                body.append(acc)
                acc, bits = 0, 0
    if bits:
        body.append(acc << (8 - bits))
    return bytes(body)


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms as images tuples; brute backtracking with
    degree pruning. Intended for small n only."""
    n = g.n
    degs = [g.degree(v) for v in range(n)]
    out: list[tuple[int, ...]] = []
    img = [-1] * n
    used = [False] * n

    def rec(v: int) -> None:
        if v == n:
            out.append(tuple(img))
            return
        for w in range(n):
            if used[w] or degs[w] != degs[v]:
                continue
            ok = True
            for u in range(v):
                if g.has_edge(u, v) != g.has_edge(img[u], w):
                    ok = False
                    break
            if ok:
                img[v] = w
                used[w] = True
                rec(v + 1)
                used[w] = False
        img[v] = -1

    rec(0)
    return out


# ---------------------------------------------------------------------------
# external formats


def parse_edge_list(text: str) -> Graph:
    """Edge-list text: first line ``n m``, then m lines ``u v`` (0-based).

    Blank lines and ``#`` comments are ignored.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"expected 'n m' header, got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(rows) - 1}")
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, edges)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 value (n <= 62; no extended sizes)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ValueError("empty graph6 line")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ValueError("graph6 byte out of range")
    n = data[0]
    if n == 63:
        raise ValueError("graph6 sizes above 62 are not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - 1 != need:
        raise ValueError(f"graph6 body length {len(data) - 1}, expected {need}")
    bits = []
    for b in data[1:]:
        for k in range(5, -1, -1):
            bits.append(b >> k & 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return from_edge_list(n, edges)


def iter_graph6(text: str):
    for line in text.splitlines():
        if line.strip():
            yield parse_graph6(line)
