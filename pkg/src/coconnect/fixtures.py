"""Embedded reference data for the certificate checks and the test suite.

Everything here is transcribed once with 1-based vertex labels, matching
the usual x_1..x_n presentation, and shifted to the engine's 0-based
labels by the loader functions. Keep the tuples verbatim; the checks are
only meaningful if this data stays untouched by refactors.
"""

from __future__ import annotations

from .bitset import mask_of
from .complexes import SimplicialComplex, make_complex
from .graphs import Graph, from_edge_list

# 6-vertex chordal example graph: triangle x1 x2 x3 with a triangle chord
# x1 x2 x5, pendant x4 on x3, pendant x6 on x5.
EXAMPLE6_N = 6
EXAMPLE6_EDGES_1IDX = ((1, 2), (1, 3), (1, 5), (2, 3), (2, 5), (3, 4), (5, 6))

# its 2-supports with respect to A = {x1}, and the resulting facets
EXAMPLE6_SUPP_1IDX = ((2, 3), (2, 5), (3, 4), (3, 5), (5, 6))
EXAMPLE6_SIGMA_FACETS_1IDX = (
    (4, 5, 6),
    (3, 4, 6),
    (2, 5, 6),
    (2, 4, 6),
    (2, 3, 4),
)

# 8-vertex gap-free graph whose 3-co-connected complex is shellable but not
# vertex decomposable
GAPFREE8_N = 8
GAPFREE8_EDGES_1IDX = (
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 6),
    (2, 8),
    (3, 6),
    (3, 8),
    (4, 7),
    (5, 7),
    (6, 7),
    (7, 8),
)

# elimination sequence emptying the complement of its 3-connected clutter
GAPFREE8_ELIMINATION_1IDX = (
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 6),
    (2, 8),
    (3, 6),
    (3, 8),
    (4, 6),
    (4, 7),
    (4, 8),
    (5, 6),
    (5, 7),
    (6, 7),
    (6, 8),
    (1, 7),
    (2, 7),
    (2, 3),
    (2, 4),
    (3, 4),
)

# shelling order for the 26 facets of its 3-co-connected complex
GAPFREE8_SHELLING_1IDX = (
    (4, 5, 6, 7, 8),
    (3, 5, 6, 7, 8),
    (2, 5, 6, 7, 8),
    (3, 4, 6, 7, 8),
    (2, 4, 6, 7, 8),
    (2, 3, 6, 7, 8),
    (3, 4, 5, 7, 8),
    (2, 4, 5, 7, 8),
    (1, 4, 5, 7, 8),
    (2, 3, 5, 6, 8),
    (2, 3, 4, 6, 8),
    (1, 3, 4, 5, 8),
    (1, 2, 4, 5, 8),
    (1, 2, 3, 5, 8),
    (1, 2, 3, 6, 8),
    (1, 2, 3, 4, 8),
    (3, 4, 5, 6, 7),
    (2, 4, 5, 6, 7),
    (1, 3, 4, 5, 7),
    (1, 2, 4, 5, 7),
    (1, 2, 3, 5, 6),
    (1, 3, 4, 5, 6),
    (1, 4, 5, 6, 7),
    (1, 2, 4, 5, 6),
    (1, 2, 3, 4, 6),
    (1, 2, 3, 4, 5),
)

# minimal 6-vertex triangulation of the real projective plane; the standard
# characteristic-dependence example (2-torsion in dimension one)
RP2_N = 6
RP2_FACETS_1IDX = (
    (1, 2, 3),
    (1, 3, 4),
    (1, 4, 5),
    (1, 5, 6),
    (1, 2, 6),
    (2, 3, 5),
    (2, 4, 5),
    (2, 4, 6),
    (3, 4, 6),
    (3, 5, 6),
)


def _shift_pairs(pairs) -> list[tuple[int, int]]:
    return [(u - 1, v - 1) for u, v in pairs]


def _shift_mask(vertices) -> int:
    return mask_of(v - 1 for v in vertices)


def example6_graph() -> Graph:
    return from_edge_list(EXAMPLE6_N, _shift_pairs(EXAMPLE6_EDGES_1IDX))


def example6_supports() -> list[int]:
    return [_shift_mask(f) for f in EXAMPLE6_SUPP_1IDX]


def example6_sigma_facets() -> list[int]:
    return [_shift_mask(f) for f in EXAMPLE6_SIGMA_FACETS_1IDX]


def gapfree8_graph() -> Graph:
    return from_edge_list(GAPFREE8_N, _shift_pairs(GAPFREE8_EDGES_1IDX))


def gapfree8_elimination() -> list[int]:
    return [_shift_mask(z) for z in GAPFREE8_ELIMINATION_1IDX]


def gapfree8_shelling() -> list[int]:
    return [_shift_mask(f) for f in GAPFREE8_SHELLING_1IDX]


def projective_plane_complex() -> SimplicialComplex:
    return make_complex(mask_of(range(RP2_N)), [_shift_mask(f) for f in RP2_FACETS_1IDX])
