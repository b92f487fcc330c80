"""The snake record: an initial codeword plus a cyclic transition sequence."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _kernels
from .perms import Perm


@dataclass
class Snake:
    n: int  # permutations live in S_{2n+1}
    construction: str
    initial: Perm
    transitions: tuple[int, ...]
    declared_size: int | None = None
    _codewords: tuple[Perm, ...] | None = field(default=None, repr=False, compare=False)

    @property
    def width(self) -> int:
        return 2 * self.n + 1

    @property
    def size(self) -> int:
        return len(self.transitions)

    def codewords(self) -> tuple[Perm, ...]:
        """Materialize the codeword sequence (cached)."""
        if self._codewords is None:
            rows, _ = _kernels.walk_codewords(self.initial, self.transitions)
            self._codewords = tuple(tuple(int(v) for v in r) for r in rows)
        return self._codewords

    def closing_codeword(self) -> Perm:
        _, closing = _kernels.walk_codewords(self.initial, self.transitions)
        return tuple(int(v) for v in closing)


def snake_from_codewords(
    n: int, construction: str, codewords: list[Perm], transitions: list[int]
) -> Snake:
    s = Snake(
        n=n,
        construction=construction,
        initial=codewords[0],
        transitions=tuple(transitions),
    )
    s._codewords = tuple(codewords)
    return s
