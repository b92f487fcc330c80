"""Loaders for the column-oriented golden fixtures shipped in data/."""

from __future__ import annotations

from importlib import resources

from .perms import Perm


def _rows(text: str) -> list[list[list[int]]]:
    """Split fixture text into blocks of integer rows; '#' lines are comments."""
    blocks: list[list[list[int]]] = [[]]
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            if blocks[-1]:
                blocks.append([])
            continue
        blocks[-1].append([int(v) for v in line.split()])
    return [b for b in blocks if b]


def _columns(rows: list[list[int]], tail: tuple[int, ...] = ()) -> list[Perm]:
    width = {len(r) for r in rows}
    assert len(width) == 1, "ragged fixture rows"
    return [tuple(r[k] for r in rows) + tail for k in range(width.pop())]


def _load(name: str) -> str:
    return resources.files("ksnake.data").joinpath(name).read_text(encoding="ascii")


def s5_snake_codewords() -> list[Perm]:
    """The 57 reference codewords of the S_5 snake, in sequence order."""
    (block,) = _rows(_load("s5_snake_columns.txt"))
    return _columns(block)


def s7_embedded_codewords() -> list[Perm]:
    """The embedded class-[2,1] snake in S_7, in sequence order."""
    embedded, _ = _rows(_load("s7_embedded_columns.txt"))
    return _columns(embedded, tail=(2, 1))


def s7_resequenced_codewords() -> list[Perm]:
    """The embedded snake after its one cut-and-reinsert rewrite."""
    _, resequenced = _rows(_load("s7_embedded_columns.txt"))
    return _columns(resequenced, tail=(2, 1))
