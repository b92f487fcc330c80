"""Merge necklaces into chains by walking the nearly spanning tree.

A chain is a cyclic snake holding exactly one necklace from every class
except [2, 1].  It grows from a class-[1, 2] necklace: for each tree edge
<x, y, z>, exactly one of the classes [x, y], [y, z], [z, x] is already
present; at the unique codeword of that necklace ending (..., z, x, y) the
two missing necklaces are spliced in with three top transitions.

Chains use only the transition indices 2n-1 and 2n+1, and the splice never
consumes the steps later needed to hook chains together (those would require
a tree edge through the excluded class [2, 1]).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConstructionError
from .merge_tree import MergeTree, build_merge_tree, edge_classes
from .partition import Necklace, enumerate_necklaces
from .perms import Perm, apply_transition, canonical_cycle, cycle_ending_with


@dataclass
class Chain:
    n: int
    name: tuple[int, ...]  # front cycle of its class-[1, 2] necklace
    codewords: tuple[Perm, ...]
    transitions: tuple[int, ...]  # transitions[k] maps codewords[k] to k+1, cyclically
    position: dict[Perm, int] = field(repr=False, default_factory=dict)

    def __len__(self) -> int:
        return len(self.codewords)


def build_chain(n: int, start: Necklace, tree: MergeTree | None = None) -> Chain:
    """Grow the chain named after ``start`` by processing all tree edges."""
    if start.label != (1, 2):
        raise ValueError(f"start necklace must be in class [1, 2], got {start.label}")
    if tree is None:
        tree = build_merge_tree(n)
    w = 2 * n + 1

    succ: dict[Perm, tuple[Perm, int]] = {}
    orbit = start.codewords
    for k, cw in enumerate(orbit):
        succ[cw] = (orbit[(k + 1) % len(orbit)], w - 2)
    fronts: dict[tuple[int, int], tuple[int, ...]] = {(1, 2): start.name}

    for e in tree.edges:
        roles = [c for c in edge_classes(e) if c in fronts]
        if len(roles) != 1:
            raise ConstructionError(
                f"edge {e}: {len(roles)} of its classes already present, need exactly 1"
            )
        (x, y) = roles[0]
        z = next(v for v in e if v not in (x, y))

        # Unique codeword of the present necklace ending (..., z, x, y).
        u = cycle_ending_with(fronts[(x, y)], z) + (x, y)
        after, tr = succ[u]
        if tr != w - 2:
            raise ConstructionError(f"edge {e}: splice point at {u} already consumed")

        run1 = _necklace_run(apply_transition(u, w), w)  # class [z, x]
        run2 = _necklace_run(apply_transition(run1[-1], w), w)  # class [y, z]
        for run in (run1, run2):
            for k in range(len(run) - 1):
                succ[run[k]] = (run[k + 1], w - 2)
        succ[u] = (run1[0], w)
        succ[run1[-1]] = (run2[0], w)
        succ[run2[-1]] = (after, w)

        fronts[(z, x)] = canonical_cycle(run1[0][:-2])
        fronts[(y, z)] = canonical_cycle(run2[0][:-2])

    codewords = [orbit[0]]
    transitions = []
    cw = orbit[0]
    while True:
        nxt, tr = succ[cw]
        transitions.append(tr)
        if nxt == orbit[0]:
            break
        codewords.append(nxt)
        cw = nxt
    if len(codewords) != len(succ):
        raise ConstructionError("chain walk did not visit every spliced codeword")
    return Chain(
        n=n,
        name=start.name,
        codewords=tuple(codewords),
        transitions=tuple(transitions),
        position={c: k for k, c in enumerate(codewords)},
    )


def _necklace_run(first: Perm, w: int) -> list[Perm]:
    """The full necklace of ``first`` as a run: w-2 codewords, w-3 rotations."""
    run = [first]
    for _ in range(w - 3):
        run.append(apply_transition(run[-1], w - 2))
    return run


class ChainSet:
    """All chains of S_{2n+1} plus a codeword -> owning-chain index."""

    def __init__(self, n: int, chains: list[Chain]):
        self.n = n
        self.chains: dict[tuple[int, ...], Chain] = {c.name: c for c in chains}
        self.owner: dict[Perm, tuple[int, ...]] = {}
        for c in chains:
            for cw in c.codewords:
                if cw in self.owner:
                    raise ConstructionError(f"codeword {cw} appears in two chains")
                self.owner[cw] = c.name

    def __len__(self) -> int:
        return len(self.chains)

    def names(self) -> list[tuple[int, ...]]:
        return sorted(self.chains)

    def owner_of(self, p: Perm) -> tuple[int, ...]:
        try:
            return self.owner[p]
        except KeyError:
            raise KeyError(f"{p} is not in any chain (class [2, 1] is never chained)")


def build_all_chains(n: int, tree: MergeTree | None = None) -> ChainSet:
    if tree is None:
        tree = build_merge_tree(n)
    starts = enumerate_necklaces(n, (1, 2))
    return ChainSet(n, [build_chain(n, s, tree) for s in starts])
