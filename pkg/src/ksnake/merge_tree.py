"""The 3-uniform class hypergraph and its nearly spanning tree.

Vertices are the tail classes [x, y]; an edge <x, y, z> connects the classes
[x, y], [y, z] and [z, x].  The nearly spanning tree covers every class
except [2, 1] and is processed in a fixed edge order: starting from class
[1, 2], each edge must touch exactly one already-connected class.  That
prefix property is what lets the chain builder splice two fresh necklaces
per edge, so the edge order is part of the construction and is preserved.
"""

from __future__ import annotations

from dataclasses import dataclass, field

HyperEdge = tuple[int, int, int]

T5_EDGES: tuple[HyperEdge, ...] = (
    (1, 2, 3),
    (1, 2, 4),
    (1, 2, 5),
    (1, 5, 3),
    (2, 3, 5),
    (1, 3, 4),
    (2, 4, 3),
    (1, 4, 5),
    (2, 5, 4),
)


def edge_classes(e: HyperEdge) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
    x, y, z = e
    return ((x, y), (y, z), (z, x))


@dataclass(frozen=True)
class MergeTree:
    n: int
    edges: tuple[HyperEdge, ...]


def build_merge_tree(n: int) -> MergeTree:
    """Nearly spanning tree on the classes of S_{2n+1}, built recursively.

    The step from width 2n-1 to 2n+1 appends, in order: <x, x+1, 2n> for
    x = 2..2n-2, then <x, x+1, 2n+1> for the same range, then the five
    closing edges that hook 2n and 2n+1 onto classes involving 1 and 2.
    """
    if n < 2:
        raise ValueError("need n >= 2 (width >= 5)")
    edges = list(T5_EDGES)
    for m in range(3, n + 1):
        top, top1 = 2 * m, 2 * m + 1
        edges.extend((x, x + 1, top) for x in range(2, top - 1))
        edges.extend((x, x + 1, top1) for x in range(2, top - 1))
        edges.extend(
            [
                (1, 2, top),
                (1, top, top - 1),
                (1, top1, top - 1),
                (1, top, top1),
                (2, top1, top),
            ]
        )
    assert len(edges) == n * (2 * n + 1) - 1
    return MergeTree(n=n, edges=tuple(edges))


@dataclass
class TreeReport:
    ok: bool
    problems: list[str] = field(default_factory=list)


def validate_merge_tree(tree: MergeTree) -> TreeReport:
    """Check coverage, tree-ness and the prefix property in one pass.

    Processing edges in order from the class [1, 2], every edge must touch
    exactly one connected class (two touched means a cycle, zero means a
    disconnected attach); afterwards every class except [2, 1] must be
    covered and [2, 1] must never appear.
    """
    w = 2 * tree.n + 1
    problems: list[str] = []
    connected = {(1, 2)}
    for e in tree.edges:
        classes = edge_classes(e)
        if (2, 1) in classes:
            problems.append(f"edge {e} touches the excluded class [2, 1]")
        present = [c for c in classes if c in connected]
        if len(present) != 1:
            kind = "cycle" if len(present) > 1 else "disconnected attach"
            problems.append(f"edge {e} touches {len(present)} connected classes ({kind})")
        connected.update(classes)
    expected = {
        (x, y)
        for x in range(1, w + 1)
        for y in range(1, w + 1)
        if x != y and (x, y) != (2, 1)
    }
    missing = expected - connected
    if missing:
        problems.append(f"{len(missing)} classes uncovered, e.g. {sorted(missing)[0]}")
    extra = connected - expected - {(1, 2)}
    if extra:
        problems.append(f"unexpected classes covered: {sorted(extra)[:3]}")
    return TreeReport(ok=not problems, problems=problems)


def dump_tree(tree: MergeTree) -> str:
    """One edge per line, "x y z", in processing order."""
    return "".join(f"{x} {y} {z}\n" for x, y, z in tree.edges)
