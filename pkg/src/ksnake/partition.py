"""Partition of the even permutations of S_{2n+1} into tail classes and necklaces.

The class of an even permutation is the ordered pair of its last two elements.
Within a class, the orbit of a codeword under the transition t_{2n-1} is a
necklace: the 2n-1 rotations of the front segment over a fixed tail.  Classes
partition A_{2n+1}; necklaces partition each class.

Throughout this package ``n`` is the half parameter: permutations live in
S_{2n+1} and have width 2n+1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .perms import (
    Perm,
    apply_transition,
    canonical_cycle,
    is_even,
)

ClassLabel = tuple[int, int]


@dataclass(frozen=True)
class Necklace:
    """A t_{2n-1}-orbit: all rotations of one front cycle over one tail."""

    label: ClassLabel
    name: tuple[int, ...]  # canonical front cycle, minimum element first
    codewords: tuple[Perm, ...]  # orbit order, starting at the canonical codeword

    @property
    def width(self) -> int:
        return len(self.name) + 2


def class_of(p: Perm) -> ClassLabel:
    """Tail class (x, y) of an even permutation of odd width >= 5."""
    if len(p) < 5 or len(p) % 2 == 0:
        raise ValueError(f"width {len(p)} not an odd number >= 5")
    if not is_even(p):
        raise ValueError(f"{p} is odd; classes partition even permutations only")
    return (p[-2], p[-1])


def front_cycle(p: Perm) -> tuple[int, ...]:
    return canonical_cycle(p[:-2])


def necklace_of(p: Perm) -> Necklace:
    label = class_of(p)
    name = front_cycle(p)
    w = len(p)
    cw = name + label
    orbit = [cw]
    for _ in range(w - 3):
        cw = apply_transition(cw, w - 2)
        orbit.append(cw)
    return Necklace(label=label, name=name, codewords=tuple(orbit))


def enumerate_necklaces(n: int, label: ClassLabel) -> list[Necklace]:
    """All (2n-2)!/2 necklaces of one class, sorted by canonical name."""
    w = 2 * n + 1
    if w < 5:
        raise ValueError("need 2n+1 >= 5")
    x, y = label
    if x == y or not (1 <= x <= w) or not (1 <= y <= w):
        raise ValueError(f"invalid class label {label} for width {w}")
    rest = sorted(set(range(1, w + 1)) - {x, y})
    lead = rest[0]
    out = []
    for tail in itertools.permutations(rest[1:]):
        cw = (lead,) + tail + (x, y)
        if is_even(cw):
            out.append(necklace_of(cw))
    return out


def class_labels(n: int) -> list[ClassLabel]:
    w = 2 * n + 1
    return [(x, y) for x in range(1, w + 1) for y in range(1, w + 1) if x != y]
