"""Distinct-label spanning trees of the chain graph.

Merging every chain into one snake needs a spanning tree whose edge labels
(linkages) are all distinct, so that all but one class-[2, 1] necklace is
used.  The selection is rule-based, not searched:

* Width 7: walk the twelve linkages on the (position of 6, position of 7)
  grid.  A linkage whose 7 sits one slot before its 6 (cyclically, in
  positions 2..5) contributes its 6-edge, every other linkage its 7-edge.
  The twelve edges form one cycle through all twelve chains; dropping the
  lexicographically largest label leaves the tree.

* Width 9: the component grid (position of 8, position of 9) gets one edge
  per grid cell, each realized by the member linkage that places 3 and 7 at
  rule-specific slots; these thirty edges form one cycle through all thirty
  components.  Drop one, then solve each component like the width-7 case
  (its compacted names are width-7 names), dropping the member linkage
  already spent on the component cycle.

Position arithmetic wraps inside 2..2n-1.  Every cycle the rules promise is
checked before use; a rule failure aborts rather than being repaired, since
it would mean the tables above are wrong.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chain_graph import (
    ChainSet,
    ConnectionEdge,
    component_key,
    linkages,
    make_connection_edge,
)
from .errors import ConstructionError
from .perms import cycle_starting_with

Name = tuple[int, ...]


@dataclass
class SpanningSelection:
    n: int
    edges: list[ConnectionEdge]


def _wrap(p: int, count: int) -> int:
    """Wrap a slot into the cyclic position window {2, ..., count + 1}."""
    return (p - 2) % count + 2


def _check_cycle(edges: list[ConnectionEdge], vertices: set, key) -> None:
    degree: dict = {v: 0 for v in vertices}
    adj: dict = {v: [] for v in vertices}
    for e in edges:
        a, b = key(e)
        if a == b:
            raise ConstructionError(f"self-loop at {a} in promised cycle")
        degree[a] += 1
        degree[b] += 1
        adj[a].append(b)
        adj[b].append(a)
    bad = [v for v, d in degree.items() if d != 2]
    if bad or len(edges) != len(vertices):
        raise ConstructionError(
            f"promised cycle is not 2-regular: {len(edges)} edges on "
            f"{len(vertices)} vertices, {len(bad)} bad degrees"
        )
    start = next(iter(vertices))
    seen = {start}
    prev, cur = None, start
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        if nxt == start:
            break
        if nxt in seen:
            raise ConstructionError("promised cycle splits into several cycles")
        seen.add(nxt)
        prev, cur = cur, nxt
    if len(seen) != len(vertices):
        raise ConstructionError("promised cycle does not visit every vertex")


def grid_label_cycle(
    component: list[Name], chains: ChainSet, strip: tuple[int, ...] = ()
) -> list[ConnectionEdge]:
    """One distinct-label cycle over the chains reachable from ``component``.

    ``component`` lists linkage names whose compacted from-4 writing (after
    deleting the values in ``strip``) has width-7 shape.  Each linkage
    contributes exactly one edge, picked by where its 6 and 7 sit.
    """
    edges = []
    for name in component:
        rep = cycle_starting_with(name, 4)
        compact = tuple(v for v in rep if v not in strip)
        if len(compact) != 5:
            raise ConstructionError(
                f"linkage {name}: compacted shape {compact} is not width-7-like"
            )
        i = compact.index(6) + 1
        j = compact.index(7) + 1
        x = 6 if j == _wrap(i - 1, 4) else 7
        edges.append(make_connection_edge(name, x, chains))
    vertices = {v for e in edges for v in (e.chain_a, e.chain_b)}
    if len(vertices) != len(component):
        raise ConstructionError(
            f"grid cycle touches {len(vertices)} chains for {len(component)} linkages"
        )
    _check_cycle(edges, vertices, key=lambda e: (e.chain_a, e.chain_b))
    return edges


def component_cycle(n: int, chains: ChainSet) -> list[ConnectionEdge]:
    """One edge per component-grid cell, forming a cycle over all components.

    For the cell (i, j) the member linkage is pinned by where 3 and 2n-1 go:
      j = i-1:  3 at i-2, 2n-1 at i-3, sign 2n   (joins cells (i-2,j), (i-3,j))
      j = i-2:  3 at i-1, 2n-1 at i+1, sign 2n+1 (joins cells (i,i-1), (i,i+1))
      else:     3 at j+1, 2n-1 at j+2, sign 2n+1 (joins cells (i,j+1), (i,j+2))
    """
    if n < 4:
        raise ValueError("component cycle only exists for width >= 9")
    w = 2 * n + 1
    count = 2 * n - 2  # cyclic position window 2..2n-1
    by_cell: dict[tuple[int, int], list[Name]] = {}
    for nk in linkages(n):
        by_cell.setdefault(component_key(nk.name), []).append(nk.name)

    edges = []
    for (i, j), members in sorted(by_cell.items()):
        if j == _wrap(i - 1, count):
            p3, p7, x = _wrap(i - 2, count), _wrap(i - 3, count), w - 1
            cells = ((_wrap(i - 2, count), j), (_wrap(i - 3, count), j))
        elif j == _wrap(i - 2, count):
            p3, p7, x = _wrap(i - 1, count), _wrap(i + 1, count), w
            cells = ((i, _wrap(i - 1, count)), (i, _wrap(i + 1, count)))
        else:
            p3, p7, x = _wrap(j + 1, count), _wrap(j + 2, count), w
            cells = ((i, _wrap(j + 1, count)), (i, _wrap(j + 2, count)))
        picks = sorted(
            m
            for m in members
            if cycle_starting_with(m, 4)[p3 - 1] == 3
            and cycle_starting_with(m, 4)[p7 - 1] == w - 2
        )
        if not picks:
            raise ConstructionError(f"cell ({i},{j}): no member linkage fits the rule")
        e = make_connection_edge(picks[0], x, chains)
        got = {component_key(e.chain_a), component_key(e.chain_b)}
        if got != set(cells):
            raise ConstructionError(
                f"cell ({i},{j}): edge joins components {sorted(got)}, "
                f"rule promised {sorted(set(cells))}"
            )
        edges.append(e)
    _check_cycle(
        edges,
        set(by_cell),
        key=lambda e: (component_key(e.chain_a), component_key(e.chain_b)),
    )
    return edges


def s7_label_cycle(chains: ChainSet) -> list[ConnectionEdge]:
    return grid_label_cycle([nk.name for nk in linkages(3)], chains)


def _drop_largest_label(edges: list[ConnectionEdge]) -> list[ConnectionEdge]:
    drop = max(e.label for e in edges)
    return [e for e in edges if e.label != drop]


def ensure_selectable(n: int) -> None:
    """Fail fast for widths whose spanning selection has no rule."""
    if n > 4:
        raise ConstructionError(
            "no rule-based distinct-label spanning tree is available for width "
            f"{2 * n + 1}; components would need a full label cycle of width {2 * n - 1}"
        )


def select_spanning_tree(n: int, chains: ChainSet) -> SpanningSelection:
    if n < 2:
        raise ValueError("need n >= 2")
    ensure_selectable(n)
    if n == 2:
        return SpanningSelection(n=2, edges=[])
    if n == 3:
        edges = _drop_largest_label(s7_label_cycle(chains))
    else:
        top = component_cycle(n, chains)
        kept = _drop_largest_label(top)
        occupied = {component_key(e.label): e.label for e in kept}
        edges = list(kept)
        by_cell: dict[tuple[int, int], list[Name]] = {}
        for nk in linkages(n):
            by_cell.setdefault(component_key(nk.name), []).append(nk.name)
        for cell, members in sorted(by_cell.items()):
            local = grid_label_cycle(sorted(members), chains, strip=(2 * n, 2 * n + 1))
            spent = occupied.get(cell)
            if spent is None:
                local = _drop_largest_label(local)
            else:
                local = [e for e in local if e.label != spent]
            if len(local) != len(members) - 1:
                raise ConstructionError(f"cell {cell}: local tree has wrong size")
            edges.extend(local)
    _validate_selection(n, edges, chains)
    return SpanningSelection(n=n, edges=edges)


def _validate_selection(n: int, edges: list[ConnectionEdge], chains: ChainSet) -> None:
    labels = [e.label for e in edges]
    if len(set(labels)) != len(labels):
        raise ConstructionError("spanning selection repeats a label")
    if len(edges) != len(chains) - 1:
        raise ConstructionError(
            f"spanning selection has {len(edges)} edges for {len(chains)} chains"
        )
    parent = {v: v for v in chains.names()}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in edges:
        ra, rb = find(e.chain_a), find(e.chain_b)
        if ra == rb:
            raise ConstructionError("spanning selection contains a cycle")
        parent[ra] = rb
    roots = {find(v) for v in chains.names()}
    if len(roots) != 1:
        raise ConstructionError("spanning selection does not connect all chains")
