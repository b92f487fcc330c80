"""Assemble the full snake: every chain plus all-but-one linkage necklaces.

Each spanning-tree edge replaces one rotation step inside a chain with a
detour: top-transition out, traverse the linkage necklace and the partner
chain in full, top-transition back.  Walking the root chain and expanding
detours recursively emits every codeword exactly once; the result has size
(2n+1)!/2 - 2n + 1 and uses only the transition indices 2n-1 and 2n+1.
"""

from __future__ import annotations

import math
import sys
from collections import deque
from dataclasses import dataclass

from .chain_graph import ConnectionEdge
from .chains import Chain, ChainSet, build_all_chains
from .errors import ConstructionError
from .perms import Perm, apply_transition, cycle_ending_with
from .snake import Snake, snake_from_codewords
from .spanning import SpanningSelection, ensure_selectable, select_spanning_tree

Name = tuple[int, ...]


@dataclass
class _Detour:
    child: Chain
    child_entry: int  # index into child.codewords
    linkage_run: list[Perm]  # width-2 codewords, rotation steps between them
    linkage_first: bool  # parent on the cw_b side traverses the linkage first


def _linkage_run(edge: ConnectionEdge, w: int) -> list[Perm]:
    """Rotations from [x, alpha, 2, 1] around to [alpha, x, 2, 1]."""
    alpha_x = cycle_ending_with(edge.label, edge.x)
    alpha = alpha_x[:-1]
    run = [(edge.x,) + alpha + (2, 1)]
    for _ in range(w - 3):
        run.append(apply_transition(run[-1], w - 2))
    if run[-1] != alpha + (edge.x, 2, 1):
        raise ConstructionError(f"linkage run of {edge.label} did not close")
    return run


def he_snake(
    n: int,
    chains: ChainSet | None = None,
    selection: SpanningSelection | None = None,
    root: Name | None = None,
) -> Snake:
    """The merged snake of size (2n+1)!/2 - 2n + 1."""
    if n < 2:
        raise ValueError("need n >= 2")
    if selection is None:
        ensure_selectable(n)  # before spending time on chains
    if chains is None:
        chains = build_all_chains(n)
    if selection is None:
        selection = select_spanning_tree(n, chains)
    w = 2 * n + 1
    if root is None:
        root = min(chains.names())

    # Orient the tree away from the root.
    adjacency: dict[Name, list[ConnectionEdge]] = {v: [] for v in chains.names()}
    for e in selection.edges:
        adjacency[e.chain_a].append(e)
        adjacency[e.chain_b].append(e)
    detours: dict[Perm, _Detour] = {}
    seen = {root}
    queue = deque([root])
    while queue:
        parent = queue.popleft()
        for e in adjacency[parent]:
            child_name = e.chain_b if parent == e.chain_a else e.chain_a
            if child_name in seen:
                continue
            seen.add(child_name)
            queue.append(child_name)
            child = chains.chains[child_name]
            run = _linkage_run(e, w)
            if parent == e.chain_a:
                # out through [2, alpha, 1, x], back through the linkage
                key, entry_cw, linkage_first = e.cw_a, apply_transition(e.cw_a, w), False
            else:
                # out through the linkage, back through [1, alpha, x, 2]
                key, entry_cw, linkage_first = e.cw_b, apply_transition(run[-1], w), True
            if key in detours:
                raise ConstructionError(f"two edges splice at the same codeword {key}")
            entry = child.position[entry_cw]
            # the child is cut open exactly at its hookup rotation
            exit_cw = e.cw_b if parent == e.chain_a else e.cw_a
            if child.codewords[entry - 1] != exit_cw or child.transitions[entry - 1] != w - 2:
                raise ConstructionError(f"chain {child_name}: hookup step not intact")
            detours[key] = _Detour(
                child=child,
                child_entry=entry,
                linkage_run=run,
                linkage_first=linkage_first,
            )
    if len(seen) != len(chains):
        raise ConstructionError("selection does not reach every chain from the root")

    out_cw: list[Perm] = []
    out_tr: list[int] = []

    def emit_linkage(run: list[Perm]) -> None:
        out_cw.extend(run)
        out_tr.extend([w - 2] * (len(run) - 1))

    def walk(chain: Chain, entry: int, include_closing: bool) -> None:
        L = len(chain.codewords)
        for s in range(L):
            i = (entry + s) % L
            cw = chain.codewords[i]
            out_cw.append(cw)
            if s == L - 1 and not include_closing:
                if cw in detours:
                    raise ConstructionError(f"cut step of {chain.name} carries a detour")
                return
            d = detours.get(cw)
            if d is None:
                out_tr.append(chain.transitions[i])
            else:
                out_tr.append(w)
                if d.linkage_first:
                    emit_linkage(d.linkage_run)
                    out_tr.append(w)
                    walk(d.child, d.child_entry, False)
                else:
                    walk(d.child, d.child_entry, False)
                    out_tr.append(w)
                    emit_linkage(d.linkage_run)
                out_tr.append(w)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 10 * len(chains) + 1000))
    try:
        walk(chains.chains[root], 0, True)
    finally:
        sys.setrecursionlimit(limit)

    expected = _he_size(n)
    if len(out_cw) != expected or len(out_tr) != expected:
        raise ConstructionError(f"assembled {len(out_cw)} codewords, expected {expected}")
    return snake_from_codewords(n, "he", out_cw, out_tr)


def _he_size(n: int) -> int:
    return math.factorial(2 * n + 1) // 2 - 2 * n + 1
