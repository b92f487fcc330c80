from collections import Counter

import pytest

from ksnake.chains import build_chain
from ksnake.errors import ConstructionError
from ksnake.fixtures import s5_snake_codewords
from ksnake.merge_tree import MergeTree, build_merge_tree
from ksnake.partition import enumerate_necklaces
from ksnake.perms import canonical_cycle, cycle_starting_with
from ksnake.reference import S7_CHAINS
from ksnake.snake import Snake
from ksnake.verify import verify_snake
from oracles import even_perms


def test_s5_chain_matches_reference_table(s5_chains):
    chain = s5_chains.chains[(3, 4, 5)]
    fixture = s5_snake_codewords()
    assert list(chain.codewords) == fixture


@pytest.mark.parametrize("n,size", [(2, 57), (3, 205)])
def test_chain_size(n, size, s5_chains, s7_chains):
    chains = {2: s5_chains, 3: s7_chains}[n]
    assert all(len(c) == size for c in chains.chains.values())
    assert size == (2 * n * (2 * n + 1) - 1) * (2 * n - 1)


def test_chain_count(s5_chains, s7_chains, s9_chains):
    assert len(s5_chains) == 1
    assert len(s7_chains) == 12
    assert len(s9_chains) == 360


def test_s7_names_match_reference(s7_chains):
    assert set(s7_chains.names()) == {canonical_cycle(c) for c in S7_CHAINS}
    # same names under the conventional from-4 display
    displayed = {cycle_starting_with(nm, 4) for nm in s7_chains.names()}
    assert displayed == set(S7_CHAINS)


def test_chains_partition_a7_minus_class21(s7_chains):
    covered = set(s7_chains.owner)
    assert len(covered) == 2460
    rest = {p for p in even_perms(7) if p[-2:] != (2, 1)}
    assert covered == rest


def test_chain_transition_alphabet_and_counts(s5_chains, s7_chains):
    for n, chains in ((2, s5_chains), (3, s7_chains)):
        w = 2 * n + 1
        edges = n * (2 * n + 1) - 1
        for c in chains.chains.values():
            hist = Counter(c.transitions)
            assert set(hist) == {w - 2, w}
            assert hist[w] == 3 * edges


@pytest.mark.parametrize("n", [2, 3])
def test_each_chain_is_a_valid_snake(n, s5_chains, s7_chains):
    chains = {2: s5_chains, 3: s7_chains}[n]
    for c in chains.chains.values():
        snake = Snake(n=n, construction="chain", initial=c.codewords[0], transitions=c.transitions)
        assert verify_snake(snake, mode="full").ok


def test_owner_lookup(s7_chains):
    assert s7_chains.owner_of((4, 5, 6, 7, 3, 1, 2)) == canonical_cycle(S7_CHAINS[0])
    with pytest.raises(KeyError):
        s7_chains.owner_of((4, 5, 7, 6, 3, 2, 1))


def test_growth_per_splice():
    tree = build_merge_tree(2)
    start = enumerate_necklaces(2, (1, 2))[0]
    sizes = [
        len(build_chain(2, start, MergeTree(n=2, edges=tree.edges[:k])).codewords)
        for k in range(3)
    ]
    assert sizes == [3, 9, 15]


def test_first_splice_block():
    # the nine codewords after processing only the edge <1, 2, 3>
    tree = build_merge_tree(2)
    start = enumerate_necklaces(2, (1, 2))[0]
    chain = build_chain(2, start, MergeTree(n=2, edges=tree.edges[:1]))
    assert list(chain.codewords) == [
        (3, 4, 5, 1, 2),
        (5, 3, 4, 1, 2),
        (4, 5, 3, 1, 2),
        (2, 4, 5, 3, 1),
        (5, 2, 4, 3, 1),
        (4, 5, 2, 3, 1),
        (1, 4, 5, 2, 3),
        (5, 1, 4, 2, 3),
        (4, 5, 1, 2, 3),
    ]
    assert list(chain.transitions) == [3, 3, 5, 3, 3, 5, 3, 3, 5]


def test_bad_edge_order_aborts():
    tree = build_merge_tree(2)
    shuffled = MergeTree(n=2, edges=tree.edges[1:] + tree.edges[:1])
    start = enumerate_necklaces(2, (1, 2))[0]
    with pytest.raises(ConstructionError, match=r"edge \(1, 5, 3\)"):
        build_chain(2, start, shuffled)


def test_start_outside_class_12_rejected():
    other = enumerate_necklaces(2, (2, 1))[0]
    with pytest.raises(ValueError):
        build_chain(2, other)
