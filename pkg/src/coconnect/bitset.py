"""Vertex sets as int bitmasks.

Vertices are dense non-negative ints; a vertex set is an int whose bit i is
set iff vertex i is a member. All iteration helpers run in ascending vertex
order, which is the determinism contract for every set-valued result in this
package.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> tuple[int, ...]:
    """Ascending tuple of the vertices in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    if not mask:
        raise ValueError("empty mask has no lowest bit")
    return (mask & -mask).bit_length() - 1


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, the full set first and 0 last."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def k_submasks(mask: int, k: int) -> Iterator[int]:
    """All size-k subsets of ``mask``, ascending in member order."""
    verts = members(mask)
    n = len(verts)
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    idx = list(range(k))
    while True:
        yield mask_of(verts[i] for i in idx)
        # advance the combination
        for i in reversed(range(k)):
            if idx[i] != i + n - k:
                break
        else:
            return
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1


def universe(n: int) -> int:
    return (1 << n) - 1
