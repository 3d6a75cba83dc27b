"""Simplicial complexes with an explicit ground set: the r-co-connected
complex, r-independence complexes, Alexander duality, links, deletions,
joins.

The ground set matters: Alexander duality and the co-connected construction
both complement inside it, and link/deletion shrink it. Two degenerate
values are kept distinct throughout: the void complex (no facets at all)
and the empty complex (single facet, the empty face).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .bitset import iter_bits, k_submasks, mask_of, members, submasks
from .clutters import con_r
from .errors import BoundExceeded
from .graphs import Graph, is_connected_within

FACE_COUNT_BOUND = 2**24


def reduce_to_maximal(sets) -> tuple[int, ...]:
    """Drop every set contained in another; returns a sorted antichain."""
    uniq = sorted(set(sets), key=lambda s: (-s.bit_count(), members(s)))
    out: list[int] = []
    for s in uniq:
        if not any(s & ~t == 0 for t in out):
            out.append(s)
    return tuple(sorted(out, key=members))


@dataclass(frozen=True)
class SimplicialComplex:
    ground: int
    facets: tuple[int, ...]

    def __post_init__(self) -> None:
        for f in self.facets:
            if f & ~self.ground:
                raise ValueError(f"facet {members(f)} escapes the ground set")
        if self.facets != reduce_to_maximal(self.facets):
            raise ValueError("facets must form a sorted antichain; use make_complex")

    def is_void(self) -> bool:
        return not self.facets

    def is_empty_complex(self) -> bool:
        return self.facets == (0,)

    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    def vertices(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    def facet_count(self) -> int:
        return len(self.facets)


def make_complex(ground: int, generators) -> SimplicialComplex:
    return SimplicialComplex(ground, reduce_to_maximal(generators))


def void_complex(ground: int = 0) -> SimplicialComplex:
    return SimplicialComplex(ground, ())


def empty_complex(ground: int = 0) -> SimplicialComplex:
    return SimplicialComplex(ground, (0,))


def simplex_on(vertices: int) -> SimplicialComplex:
    return SimplicialComplex(vertices, (vertices,))


# ---------------------------------------------------------------------------
# the co-connected construction


def supp_r(g: Graph, a: int, r: int) -> list[int]:
    """Size-r sets disjoint from ``a`` whose union with it induces a
    connected subgraph."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if a & ~g.vertex_mask:
        raise ValueError("a is not a subset of the vertices")
    rest = g.vertex_mask & ~a
    if a == 0:
        from .graphs import connected_ksubsets_within

        return connected_ksubsets_within(g.adj, g.vertex_mask, r)
    out = [f for f in k_submasks(rest, r) if is_connected_within(g.adj, f | a)]
    return sorted(out, key=members)


def sigma_r(g: Graph, a: int, r: int) -> SimplicialComplex:
    """The r-co-connected complex w.r.t. ``a``: generated by the complements
    (inside ground = V minus a) of the supports."""
    ground = g.vertex_mask & ~a
    return make_complex(ground, (ground & ~f for f in supp_r(g, a, r)))


def ind_r(g: Graph, r: int) -> SimplicialComplex:
    """The r-independence complex: faces are the sets every induced
    component of which has fewer than r vertices."""
    if r < 1:
        raise ValueError("r must be >= 1")
    from .graphs import components_within

    full = g.vertex_mask

    def independent(w: int) -> bool:
        return all(c.bit_count() <= r - 1 for c in components_within(g.adj, w))

    # peel maximal faces from the top; subsets of known faces are skipped
    gens: list[int] = []
    for w in sorted(submasks(full), key=lambda m: -m.bit_count()):
        if any(w & ~f == 0 for f in gens):
            continue
        if independent(w):
            gens.append(w)
    return make_complex(full, gens)


# ---------------------------------------------------------------------------
# duality and local operations


def _minimal_transversals(sets: list[int]) -> list[int]:
    """Minimal hitting sets, by incremental multiplication."""
    trans = [0]
    for s in sets:
        nxt: list[int] = []
        for t in trans:
            if t & s:
                nxt.append(t)
            else:
                for x in iter_bits(s):
                    nxt.append(t | (1 << x))
        trans = list(reduce_minimal(nxt))
    return trans


def reduce_minimal(sets) -> tuple[int, ...]:
    """Drop every set containing another; dual of reduce_to_maximal."""
    uniq = sorted(set(sets), key=lambda s: (s.bit_count(), members(s)))
    out: list[int] = []
    for s in uniq:
        if not any(t & ~s == 0 for t in out):
            out.append(s)
    return tuple(out)


def minimal_nonfaces(d: SimplicialComplex) -> tuple[int, ...]:
    """Minimal sets inside the ground set contained in no facet.

    A set misses every facet iff it hits every facet complement, so these
    are the minimal transversals of the complemented facet list; no face
    enumeration happens.
    """
    if not d.facets:
        return (0,)  # the empty set is already a non-face of the void complex
    comp = [d.ground & ~f for f in d.facets]
    return tuple(sorted(_minimal_transversals(comp), key=members))


def alexander_dual(d: SimplicialComplex) -> SimplicialComplex:
    """Dual over the same ground set: facets are complements of minimal
    non-faces."""
    return make_complex(d.ground, (d.ground & ~nf for nf in minimal_nonfaces(d)))


def is_face(d: SimplicialComplex, f: int) -> bool:
    return any(f & ~fac == 0 for fac in d.facets)


def link(d: SimplicialComplex, f: int) -> SimplicialComplex:
    if not is_face(d, f):
        raise ValueError(f"{members(f)} is not a face")
    gens = [fac & ~f for fac in d.facets if f & ~fac == 0]
    return make_complex(d.ground & ~f, gens)


def del_face(d: SimplicialComplex, f: int) -> SimplicialComplex:
    """Faces avoiding ``f`` entirely; the ground set shrinks by ``f``."""
    if f & ~d.ground:
        raise ValueError(f"{members(f)} is not inside the ground set")
    if f == 0:
        return d
    return make_complex(d.ground & ~f, (fac & ~f for fac in d.facets))


def join_complex(d1: SimplicialComplex, d2: SimplicialComplex) -> SimplicialComplex:
    if d1.ground & d2.ground:
        raise ValueError("join needs disjoint ground sets; relabel first")
    gens = [f1 | f2 for f1 in d1.facets for f2 in d2.facets]
    return make_complex(d1.ground | d2.ground, gens)


def union_complex(d1: SimplicialComplex, d2: SimplicialComplex) -> SimplicialComplex:
    return make_complex(d1.ground | d2.ground, d1.facets + d2.facets)


def shift_complex(d: SimplicialComplex, offset: int) -> SimplicialComplex:
    return SimplicialComplex(d.ground << offset, tuple(f << offset for f in d.facets))


# ---------------------------------------------------------------------------
# face data


def faces(d: SimplicialComplex, bound: int = FACE_COUNT_BOUND):
    """All faces, deduplicated, by ascending size then member order."""
    for f in d.facets:
        if 1 << f.bit_count() > bound:
            raise BoundExceeded(f"facet of size {f.bit_count()} alone exceeds the face bound")
    seen: set[int] = set()
    for fac in d.facets:
        for sub in submasks(fac):
            if sub not in seen:
                seen.add(sub)
                if len(seen) > bound:
                    raise BoundExceeded(f"face count exceeds bound {bound}")
    return sorted(seen, key=lambda m: (m.bit_count(), members(m)))


def f_vector(d: SimplicialComplex, bound: int = FACE_COUNT_BOUND) -> tuple[int, ...]:
    """Counts per dimension starting at the empty face: (f_-1, f_0, ...)."""
    if d.is_void():
        return ()
    counts: dict[int, int] = {}
    for f in faces(d, bound):
        counts[f.bit_count()] = counts.get(f.bit_count(), 0) + 1
    return tuple(counts.get(k, 0) for k in range(max(counts) + 1))


def dimension(d: SimplicialComplex) -> int:
    """Max facet size minus one; the void complex gets -2 by convention."""
    if d.is_void():
        return -2
    return max(f.bit_count() for f in d.facets) - 1


def is_pure(d: SimplicialComplex) -> bool:
    if len(d.facets) <= 1:
        return True
    sizes = {f.bit_count() for f in d.facets}
    return len(sizes) == 1


def euler_characteristic_reduced(d: SimplicialComplex, bound: int = FACE_COUNT_BOUND) -> int:
    """Alternating face-count sum including the empty face: sum of
    (-1)^dim over all faces."""
    total = 0
    for f in faces(d, bound):
        total += -1 if f.bit_count() % 2 == 0 else 1
    return total


# ---------------------------------------------------------------------------
# serialization


def complex_to_json(d: SimplicialComplex, one_indexed: bool = False) -> str:
    shift = 1 if one_indexed else 0
    doc = {
        "ground": [v + shift for v in members(d.ground)],
        "facets": [[v + shift for v in members(f)] for f in d.facets],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def complex_from_json(text: str) -> SimplicialComplex:
    doc = json.loads(text)
    ground = mask_of(doc["ground"])
    facets = [mask_of(f) for f in doc["facets"]]
    return make_complex(ground, facets)


def sigma_r_empty(g: Graph, r: int) -> SimplicialComplex:
    """Convenience alias for the A = empty-set case, built straight from the
    r-connected clutter."""
    full = g.vertex_mask
    return make_complex(full, (full & ~c for c in con_r(g, r).circuits))
