"""The chain graph: which chains a class-[2, 1] necklace can hook together.

A linkage [alpha, x]-[2, 1] merges the two chains owning [alpha, 1, x, 2] and
[alpha, 2, 1, x].  For x in {3, 4, 5} both land in the same chain and there
is no edge; for x > 5 the owners can be read off the linkage name directly:
swap 3 and x for the first owner, shift the run 5..x (even x) or
5..x-2, x (odd x) for the second.

The closed forms for large x are cheap but subtle, so every edge built here
is cross-checked against the brute-force owner lookup; a mismatch aborts the
construction rather than risking an invalid snake.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import ChainSet, build_all_chains
from .errors import ConstructionError
from .partition import Necklace, enumerate_necklaces
from .perms import (
    Perm,
    cycle_ending_with,
    cycle_starting_with,
    relabel_cycle,
    swap_values,
    value_map_from_cycle,
)

Name = tuple[int, ...]


def connection_endpoints(link_name: Name, x: int) -> tuple[Name, Name] | None:
    """Chain names joined through a linkage by element x; None for x <= 5.

    The first name owns [alpha, 1, x, 2], the second [alpha, 2, 1, x].
    """
    w = len(link_name) + 2
    if not 3 <= x <= w:
        raise ValueError(f"x={x} out of range 3..{w}")
    if x <= 5:
        return None
    first = swap_values(link_name, 3, x)
    if x % 2 == 0:
        run = list(range(5, x + 1))
    else:
        run = list(range(5, x - 1)) + [x]
    second = relabel_cycle(link_name, value_map_from_cycle(run))
    return first, second


def splice_codewords(link_name: Name, x: int) -> tuple[Perm, Perm]:
    """The codeword pair ([alpha, 1, x, 2], [alpha, 2, 1, x]) for this linkage."""
    alpha = cycle_ending_with(link_name, x)[:-1]
    return alpha + (1, x, 2), alpha + (2, 1, x)


def trace_chain_of(p: Perm, chains: ChainSet) -> Name:
    """Owning chain of a codeword, by lookup; the oracle for the closed forms."""
    return chains.owner_of(p)


@dataclass(frozen=True)
class ConnectionEdge:
    x: int  # the sign: which element realizes the merge
    label: Name  # linkage name (canonical front cycle)
    chain_a: Name  # owner of cw_a = [alpha, 1, x, 2]
    chain_b: Name  # owner of cw_b = [alpha, 2, 1, x]
    cw_a: Perm
    cw_b: Perm


def make_connection_edge(link_name: Name, x: int, chains: ChainSet) -> ConnectionEdge:
    """Build one edge, hard-gated on the closed form matching the trace oracle."""
    predicted = connection_endpoints(link_name, x)
    if predicted is None:
        raise ValueError(f"x={x} yields no connection")
    cw_a, cw_b = splice_codewords(link_name, x)
    traced = (trace_chain_of(cw_a, chains), trace_chain_of(cw_b, chains))
    if traced != predicted:
        raise ConstructionError(
            f"endpoint formula disagrees with trace for linkage {link_name}, x={x}: "
            f"formula {predicted}, trace {traced}"
        )
    if traced[0] == traced[1]:
        raise ConstructionError(
            f"linkage {link_name}, x={x}: both splice codewords in one chain"
        )
    return ConnectionEdge(
        x=x, label=link_name, chain_a=traced[0], chain_b=traced[1], cw_a=cw_a, cw_b=cw_b
    )


def linkages(n: int) -> list[Necklace]:
    return enumerate_necklaces(n, (2, 1))


def component_key(name: Name) -> tuple[int, int]:
    """(position of 2n, position of 2n+1) in the from-4 writing of a name."""
    w = len(name) + 2
    rep = cycle_starting_with(name, 4)
    return rep.index(w - 1) + 1, rep.index(w) + 1


@dataclass
class ChainGraph:
    n: int
    vertices: list[Name]
    edges: list[ConnectionEdge]
    component: dict[Name, tuple[int, int]]

    def intra_component_edges(self) -> list[ConnectionEdge]:
        w = 2 * self.n + 1
        return [e for e in self.edges if e.x not in (w - 1, w)]

    def components(self) -> list[set[Name]]:
        """Connected components once the two top signs are removed."""
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in self.intra_component_edges():
            ra, rb = find(e.chain_a), find(e.chain_b)
            if ra != rb:
                parent[ra] = rb
        groups: dict[Name, set[Name]] = {}
        for v in self.vertices:
            groups.setdefault(find(v), set()).add(v)
        return sorted(groups.values(), key=lambda s: sorted(s)[0])


def build_chain_graph(n: int, chains: ChainSet | None = None) -> ChainGraph:
    """All edges for all linkages and all x with 6 <= x <= 2n+1."""
    if chains is None:
        chains = build_all_chains(n)
    w = 2 * n + 1
    edges = [
        make_connection_edge(nk.name, x, chains)
        for nk in linkages(n)
        for x in range(6, w + 1)
    ]
    vertices = chains.names()
    return ChainGraph(
        n=n,
        vertices=vertices,
        edges=edges,
        component={v: component_key(v) for v in vertices},
    )


def dump_graph(graph: ChainGraph) -> str:
    lines = [f"vertices {len(graph.vertices)}"]
    lines += [" ".join(map(str, v)) for v in graph.vertices]
    lines.append(f"edges {len(graph.edges)}")
    lines += [
        f"M[{e.x}] label={','.join(map(str, e.label))} "
        f"a={','.join(map(str, e.chain_a))} b={','.join(map(str, e.chain_b))}"
        for e in graph.edges
    ]
    return "\n".join(lines) + "\n"
