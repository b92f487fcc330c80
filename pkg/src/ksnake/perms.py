"""Permutation arithmetic for push-to-the-top Gray codes.

Permutations are tuples in vector notation over the values 1..n: the element
at 1-based position i is ``p[i-1]``.  All position arguments in this package
are 1-based; the 0-based tuple layout never leaks through an interface.

A push-to-the-top transition with index i moves the element at position i to
the front.  Cyclic orders ("cycles") are tuples of distinct values whose
rotations all denote the same object; the canonical form puts the minimum
element first.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]
Cycle = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def apply_transition(p: Perm, i: int) -> Perm:
    """Move the element at position i (2 <= i <= len(p)) to the front.

    >>> apply_transition((1, 2, 3, 4, 5), 3)
    (3, 1, 2, 4, 5)
    """
    if not 2 <= i <= len(p):
        raise ValueError(f"transition index {i} out of range for length {len(p)}")
    return (p[i - 1],) + p[: i - 1] + p[i:]


def apply_inverse(p: Perm, i: int) -> Perm:
    """Undo a transition: move the front element back to position i."""
    if not 2 <= i <= len(p):
        raise ValueError(f"transition index {i} out of range for length {len(p)}")
    return p[1:i] + (p[0],) + p[i:]


def compose(s: Perm, p: Perm) -> Perm:
    """Composition s∘p: result(i) = s(p(i))."""
    if len(s) != len(p):
        raise ValueError("length mismatch in compose")
    return tuple(s[v - 1] for v in p)


def inverse_of(p: Perm) -> Perm:
    out = [0] * len(p)
    for pos, v in enumerate(p):
        out[v - 1] = pos + 1
    return tuple(out)


def inversions(p: Sequence[int]) -> int:
    """Number of out-of-order pairs; O(n^2), fine for the small n used here."""
    n = len(p)
    return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])


def is_even(p: Sequence[int]) -> bool:
    return inversions(p) % 2 == 0


def kendall_distance(a: Perm, b: Perm) -> int:
    """Minimum number of adjacent transpositions turning a into b.

    Equals the inversion count of a read through b's positions, which makes
    the symmetry non-obvious but the computation direct.

    >>> kendall_distance((1, 2, 3, 4), (2, 3, 1, 4))
    2
    """
    if len(a) != len(b):
        raise ValueError("length mismatch in kendall_distance")
    pos_b = inverse_of(b)
    return inversions(tuple(pos_b[v - 1] for v in a))


def all_perms(n: int) -> Iterator[Perm]:
    import itertools

    return itertools.permutations(range(1, n + 1))


def even_perms(n: int) -> Iterator[Perm]:
    return (p for p in all_perms(n) if is_even(p))


# -- cyclic orders ------------------------------------------------------------


def canonical_cycle(c: Iterable[int]) -> Cycle:
    """Rotate a cyclic order so its minimum element comes first.

    >>> canonical_cycle((4, 5, 6, 7, 3))
    (3, 4, 5, 6, 7)
    """
    t = tuple(c)
    i = t.index(min(t))
    return t[i:] + t[:i]


def cycle_starting_with(c: Iterable[int], v: int) -> Cycle:
    t = tuple(c)
    i = t.index(v)
    return t[i:] + t[:i]


def cycle_ending_with(c: Iterable[int], v: int) -> Cycle:
    t = cycle_starting_with(c, v)
    return t[1:] + (v,)


def rotations(c: Sequence[int]) -> list[Cycle]:
    t = tuple(c)
    return [t[i:] + t[:i] for i in range(len(t))]


def value_map_from_cycle(elements: Sequence[int]) -> dict[int, int]:
    """The permutation-in-cycle-notation (e_1 e_2 ... e_k) as a value map."""
    k = len(elements)
    return {elements[i]: elements[(i + 1) % k] for i in range(k)}


def relabel_cycle(c: Iterable[int], vmap: dict[int, int]) -> Cycle:
    """Apply a value relabeling to a cyclic order; result is canonical."""
    return canonical_cycle(tuple(vmap.get(v, v) for v in c))


def swap_values(c: Iterable[int], a: int, b: int) -> Cycle:
    return relabel_cycle(c, {a: b, b: a})
