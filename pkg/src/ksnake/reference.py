"""Known-good reference tables used to pin construction output.

The S_7 chain and linkage names follow the conventional listing order, with
front cycles written starting from 4 (the value that every later renaming
fixes in place).  The S_9 component cycle is the reference structure for the
component-level label cycle on the (position of 8, position of 9) grid.
"""

# The 12 chains of S_7, indexed c_1..c_12 (front cycles, written from 4).
S7_CHAINS: tuple[tuple[int, ...], ...] = (
    (4, 5, 6, 7, 3),
    (4, 6, 7, 5, 3),
    (4, 7, 5, 6, 3),
    (4, 7, 6, 3, 5),
    (4, 7, 3, 5, 6),
    (4, 3, 5, 7, 6),
    (4, 5, 7, 3, 6),
    (4, 3, 6, 5, 7),
    (4, 5, 3, 6, 7),
    (4, 6, 5, 3, 7),
    (4, 6, 3, 7, 5),
    (4, 3, 7, 6, 5),
)

# The 12 linkages (class-[2, 1] necklaces) of S_7, indexed eta_1..eta_12.
S7_LINKAGES: tuple[tuple[int, ...], ...] = (
    (4, 5, 7, 6, 3),
    (4, 6, 5, 7, 3),
    (4, 7, 6, 5, 3),
    (4, 6, 7, 3, 5),
    (4, 3, 5, 6, 7),
    (4, 6, 3, 5, 7),
    (4, 7, 5, 3, 6),
    (4, 7, 3, 6, 5),
    (4, 3, 6, 7, 5),
    (4, 5, 6, 3, 7),
    (4, 3, 7, 5, 6),
    (4, 5, 3, 7, 6),
)

# Known-good ingredients for the size-2517 extended snake in S_7:
# the relabeling used to embed the 57-codeword S_5 snake into class [2, 1],
# the pivot of the one cut-and-reinsert rewrite applied to it, and the six
# chain pairs inserted afterwards (1-based indices into S7_CHAINS).
S7_GOLDEN_EMBEDDING: dict[int, int] = {1: 5, 2: 6, 3: 3, 4: 7, 5: 4}
S7_GOLDEN_PIVOT: tuple[int, ...] = (3, 5, 6, 7, 4, 2, 1)
S7_GOLDEN_PAIRS: tuple[tuple[int, int], ...] = (
    (3, 9),
    (2, 12),
    (5, 7),
    (4, 8),
    (10, 11),
    (1, 6),
)

# Component-level label cycle for S_9: 30 edges over the grid of components
# keyed by (position of 8, position of 9) in from-4 names, positions 2..7.
S9_COMPONENT_CYCLE: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = (
    ((2, 4), (2, 5)),
    ((2, 5), (2, 6)),
    ((2, 6), (2, 7)),
    ((2, 7), (2, 3)),
    ((3, 5), (3, 6)),
    ((3, 6), (3, 7)),
    ((3, 7), (3, 2)),
    ((3, 2), (3, 4)),
    ((4, 6), (4, 7)),
    ((4, 7), (4, 2)),
    ((4, 2), (4, 3)),
    ((4, 3), (4, 5)),
    ((5, 7), (5, 2)),
    ((5, 2), (5, 3)),
    ((5, 3), (5, 4)),
    ((5, 4), (5, 6)),
    ((6, 2), (6, 3)),
    ((6, 3), (6, 4)),
    ((6, 4), (6, 5)),
    ((6, 5), (6, 7)),
    ((7, 3), (7, 4)),
    ((7, 4), (7, 5)),
    ((7, 5), (7, 6)),
    ((7, 6), (7, 2)),
    ((2, 4), (3, 4)),
    ((3, 5), (4, 5)),
    ((4, 6), (5, 6)),
    ((5, 7), (6, 7)),
    ((6, 2), (7, 2)),
    ((7, 3), (2, 3)),
)
