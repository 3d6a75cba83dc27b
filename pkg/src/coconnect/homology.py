"""Reduced simplicial homology over Q and F_p, integral torsion via Smith
normal form, the Reisner criterion for Cohen-Macaulayness, Leray numbers,
and the dual-complex translation of the linear-resolution property.

All arithmetic is exact: characteristic zero ranks come from fraction-free
integer elimination with unit pivots preferred, positive characteristic
from modular elimination. Boundary matrices include the augmentation map,
so Betti numbers are reduced; the empty complex is the unique complex with
Betti -1 equal to one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from .bitset import members
from .complexes import (
    FACE_COUNT_BOUND,
    SimplicialComplex,
    alexander_dual,
    faces,
    make_complex,
)
from .errors import BoundExceeded

LERAY_GROUND_BOUND = 12


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 (the rationals) or a prime p."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {self.characteristic}")

    @property
    def label(self) -> str:
        p = self.characteristic
        if p == 0:
            return "Q"
        if p == 2:
            return "F2"
        return f"Fp:{p}"

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip()
        if t in ("Q", "q", "0"):
            return cls(0)
        if t.startswith("Fp:"):
            return cls(int(t[3:]))
        if t and t[0] in "Ff":
            return cls(int(t[1:]))
        return cls(int(t))


QQ = FieldSpec(0)
F2 = FieldSpec(2)


@dataclass(frozen=True)
class BettiProfile:
    """Reduced Betti numbers per dimension, with optional torsion orders
    (present only when computed over the integers)."""

    field: str
    betti: dict
    torsion: dict | None = None

    def nonzero(self) -> dict:
        return {k: v for k, v in self.betti.items() if v}

    def to_json(self) -> str:
        doc = {
            "field": self.field,
            "betti": {str(k): v for k, v in sorted(self.betti.items())},
            "torsion": {str(k): list(v) for k, v in sorted((self.torsion or {}).items())},
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# exact rank computations


def _rank_of(rows: list[dict[int, int]], p: int) -> int:
    """Rank of a sparse integer matrix, over Q when p == 0 else over F_p.

    Row scaling by nonzero integers keeps the rank, so the characteristic
    zero path stays in exact integers (no fractions ever appear).
    """
    if p:
        work = []
        for r in rows:
            rr = {c: v % p for c, v in r.items() if v % p}
            if rr:
                work.append(rr)
    else:
        work = [dict(r) for r in rows if r]
    rank = 0
    while work:
        ri = min(range(len(work)), key=lambda i: (len(work[i]), i))
        prow = work.pop(ri)
        c, a = min(prow.items(), key=lambda cv: (abs(cv[1]) != 1, abs(cv[1]), cv[0]))
        rank += 1
        nxt = []
        for r in work:
            b = r.get(c)
            if not b:
                nxt.append(r)
                continue
            out: dict[int, int] = {}
            if p:
                f = b * pow(a, -1, p) % p
                for k in r.keys() | prow.keys():
                    y = (r.get(k, 0) - f * prow.get(k, 0)) % p
                    if y:
                        out[k] = y
            else:
                g = gcd(a, b)
                fa, fb = a // g, b // g
                for k in r.keys() | prow.keys():
                    y = fa * r.get(k, 0) - fb * prow.get(k, 0)
                    if y:
                        out[k] = y
            if out:
                nxt.append(out)
        work = nxt
    return rank


def _snf_diagonal(rows: list[dict[int, int]], nrows: int, ncols: int) -> list[int]:
    """Smith normal form diagonal (positive entries, divisibility chain) of
    a small dense-ified integer matrix."""
    A = [[0] * ncols for _ in range(nrows)]
    for i, r in enumerate(rows):
        for c, v in r.items():
            A[i][c] = v
    diag: list[int] = []
    t = 0
    m, n = nrows, ncols
    while t < m and t < n:
        # locate a minimal-magnitude nonzero pivot in the corner submatrix
        pi = pj = -1
        pv = 0
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (pv == 0 or abs(v) < abs(pv)):
                    pi, pj, pv = i, j, v
        if pv == 0:
            break
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
        while True:
            # clear the pivot column
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    if q:
                        A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
                        if A[t][t] < 0:
                            A[t] = [-x for x in A[t]]
                        dirty = True
            # clear the pivot row
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    if q:
                        for row in A:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        for row in A:
                            row[t], row[j] = row[j], row[t]
                        if A[t][t] < 0:
                            A[t] = [-x for x in A[t]]
                        dirty = True
            if dirty:
                continue
            # divisibility fixup: the pivot must divide the rest
            piv = A[t][t]
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
        diag.append(A[t][t])
        t += 1
    return diag


# ---------------------------------------------------------------------------
# chain complexes


def _faces_by_card(d: SimplicialComplex, bound: int) -> list[list[int]]:
    """Faces grouped by cardinality; index c holds the card-c faces."""
    if d.is_void():
        return []
    out: list[list[int]] = []
    for f in faces(d, bound):
        c = f.bit_count()
        while len(out) <= c:
            out.append([])
        out[c].append(f)
    return out


def _boundary_rows(upper: list[int], lower_index: dict[int, int]) -> list[dict[int, int]]:
    rows = []
    for f in upper:
        row: dict[int, int] = {}
        sign = 1
        for v in members(f):
            row[lower_index[f & ~(1 << v)]] = sign
            sign = -sign
        rows.append(row)
    return rows


def reduced_betti(
    d: SimplicialComplex, field: FieldSpec = QQ, face_bound: int = FACE_COUNT_BOUND
) -> BettiProfile:
    grouped = _faces_by_card(d, face_bound)
    if not grouped:
        return BettiProfile(field.label, {})
    top = len(grouped) - 1
    index = [{f: i for i, f in enumerate(g)} for g in grouped]
    ranks = [0] * (top + 2)  # ranks[c] = rank of boundary from card c to c-1
    for c in range(1, top + 1):
        rows = _boundary_rows(grouped[c], index[c - 1])
        ranks[c] = _rank_of(rows, field.characteristic)
    betti = {}
    for c in range(top + 1):
        betti[c - 1] = len(grouped[c]) - ranks[c] - ranks[c + 1]
    return BettiProfile(field.label, betti)


def integer_homology(d: SimplicialComplex, face_bound: int = FACE_COUNT_BOUND) -> BettiProfile:
    """Free ranks plus torsion orders per dimension, from the Smith normal
    form of every boundary matrix."""
    grouped = _faces_by_card(d, face_bound)
    if not grouped:
        return BettiProfile("Z", {}, {})
    top = len(grouped) - 1
    index = [{f: i for i, f in enumerate(g)} for g in grouped]
    diags: list[list[int]] = [[] for _ in range(top + 2)]
    for c in range(1, top + 1):
        rows = _boundary_rows(grouped[c], index[c - 1])
        diags[c] = _snf_diagonal(rows, len(rows), len(grouped[c - 1]))
    betti = {}
    torsion = {}
    for c in range(top + 1):
        rank_in = len(diags[c + 1])
        rank_out = len(diags[c])
        betti[c - 1] = len(grouped[c]) - rank_out - rank_in
        tors = tuple(x for x in diags[c + 1] if x > 1)
        if tors:
            torsion[c - 1] = tors
    return BettiProfile("Z", betti, torsion)


# ---------------------------------------------------------------------------
# derived predicates


def is_cohen_macaulay(
    d: SimplicialComplex, field: FieldSpec = QQ, face_bound: int = FACE_COUNT_BOUND
) -> tuple[bool, tuple[int, int] | None]:
    """Reisner's criterion over every face; links are deduplicated by their
    facet list. On failure returns (face, offending homological dimension)."""
    if d.is_void():
        return True, None
    seen: set[tuple[int, ...]] = set()
    for f in sorted(faces(d, face_bound), key=lambda m: (-m.bit_count(), members(m))):
        lk_facets = tuple(sorted((fac & ~f for fac in d.facets if f & ~fac == 0), key=members))
        if lk_facets in seen:
            continue
        seen.add(lk_facets)
        dim_lk = max(x.bit_count() for x in lk_facets) - 1
        if dim_lk <= -1:
            continue
        lk = SimplicialComplex(d.ground & ~f, lk_facets)
        profile = reduced_betti(lk, field, face_bound)
        for i in range(-1, dim_lk):
            if profile.betti.get(i, 0):
                return False, (f, i)
    return True, None


def leray_number(d: SimplicialComplex, ground_bound: int = LERAY_GROUND_BOUND) -> int:
    """Least L with vanishing integral reduced homology in dimensions >= L
    over every induced subcomplex."""
    g = d.ground
    if g.bit_count() > ground_bound:
        raise BoundExceeded(f"leray_number capped at ground size {ground_bound}")
    from .bitset import submasks

    worst = -1
    for w in submasks(g):
        sub = make_complex(w, (f & w for f in d.facets))
        if sub.is_void():
            continue
        prof = integer_homology(sub)
        for k, v in prof.betti.items():
            if v and k > worst:
                worst = k
        for k in prof.torsion or {}:
            if k > worst:
                worst = k
    return max(0, worst + 1)


def dual_has_linear_resolution(
    d: SimplicialComplex, field: FieldSpec = QQ, face_bound: int = FACE_COUNT_BOUND
) -> tuple[bool, tuple[int, int] | None]:
    """The resolution-side translation: the circuit ideal attached to ``d``
    has a linear resolution over the field iff the Alexander dual of ``d``
    is Cohen-Macaulay over it. This is the only resolution-flavoured
    computation in the package."""
    return is_cohen_macaulay(alexander_dual(d), field, face_bound)
