"""Text serialization of snakes.

Format, bit-exact and ASCII-only:

    snake v1
    n=<width> construction=<id> size=<M>
    <initial permutation, space-separated>
    <transition indices, 60 per line, space-separated>
    ...

with a trailing newline.  The header size is recorded as declared; the
verifier, not the parser, decides whether it matches the transitions.
"""

from __future__ import annotations

from .errors import SnakeFileError
from .snake import Snake

MAGIC = "snake v1"
PER_LINE = 60


def serialize(snake: Snake) -> str:
    lines = [
        MAGIC,
        f"n={snake.width} construction={snake.construction} size={snake.size}",
        " ".join(map(str, snake.initial)),
    ]
    ts = snake.transitions
    for k in range(0, len(ts), PER_LINE):
        lines.append(" ".join(map(str, ts[k : k + PER_LINE])))
    return "\n".join(lines) + "\n"


def deserialize(text: str) -> Snake:
    lines = text.splitlines()
    if not lines or lines[0] != MAGIC:
        raise SnakeFileError(f"missing '{MAGIC}' header")
    if len(lines) < 3:
        raise SnakeFileError("truncated file")
    fields = {}
    for part in lines[1].split():
        if "=" not in part:
            raise SnakeFileError(f"bad header field {part!r}")
        k, v = part.split("=", 1)
        fields[k] = v
    try:
        width = int(fields["n"])
        construction = fields["construction"]
        size = int(fields["size"])
    except (KeyError, ValueError) as exc:
        raise SnakeFileError(f"bad header line: {lines[1]!r}") from exc
    if width < 5 or width % 2 == 0:
        raise SnakeFileError(f"width {width} is not an odd number >= 5")
    try:
        initial = tuple(int(v) for v in lines[2].split())
        transitions = tuple(
            int(v) for line in lines[3:] for v in line.split()
        )
    except ValueError as exc:
        raise SnakeFileError("non-integer payload") from exc
    if sorted(initial) != list(range(1, width + 1)):
        raise SnakeFileError("initial line is not a permutation of 1..n")
    if any(not 2 <= t <= width for t in transitions):
        raise SnakeFileError("transition index out of range")
    return Snake(
        n=(width - 1) // 2,
        construction=construction,
        initial=initial,
        transitions=transitions,
        declared_size=size,
    )


def write_snake(snake: Snake, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize(snake))


def read_snake(path) -> Snake:
    try:
        with open(path, encoding="ascii") as fh:
            return deserialize(fh.read())
    except OSError as exc:
        raise SnakeFileError(f"cannot read {path}: {exc}") from exc
