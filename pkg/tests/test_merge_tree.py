import pytest

from ksnake.merge_tree import (
    MergeTree,
    T5_EDGES,
    build_merge_tree,
    dump_tree,
    edge_classes,
    validate_merge_tree,
)


def test_t5_base_case():
    tree = build_merge_tree(2)
    assert tree.edges == (
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


def test_t7_recursion():
    tree = build_merge_tree(3)
    assert len(tree.edges) == 20
    assert tree.edges[:9] == T5_EDGES
    assert tree.edges[9:] == (
        (2, 3, 6),
        (3, 4, 6),
        (4, 5, 6),
        (2, 3, 7),
        (3, 4, 7),
        (4, 5, 7),
        (1, 2, 6),
        (1, 6, 5),
        (1, 7, 5),
        (1, 6, 7),
        (2, 7, 6),
    )


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_edge_count_and_validity(n):
    tree = build_merge_tree(n)
    assert len(tree.edges) == n * (2 * n + 1) - 1
    report = validate_merge_tree(tree)
    assert report.ok, report.problems


def test_excluded_class_untouched():
    for n in (2, 3, 4, 5):
        for e in build_merge_tree(n).edges:
            assert (2, 1) not in edge_classes(e)


def test_removed_edge_detected():
    tree = build_merge_tree(2)
    broken = MergeTree(n=2, edges=tree.edges[1:])
    report = validate_merge_tree(broken)
    assert not report.ok
    assert any("uncovered" in p or "connected" in p for p in report.problems)


def test_appended_cycle_detected():
    tree = build_merge_tree(2)
    broken = MergeTree(n=2, edges=tree.edges + ((3, 4, 5),))
    report = validate_merge_tree(broken)
    assert not report.ok
    assert any("cycle" in p for p in report.problems)


def test_needs_n_at_least_two():
    with pytest.raises(ValueError):
        build_merge_tree(1)


def test_dump_format():
    text = dump_tree(build_merge_tree(2))
    lines = text.splitlines()
    assert lines[0] == "1 2 3"
    assert len(lines) == 9
    assert text.endswith("\n")
