import pytest

from ksnake.errors import SnakeFileError
from ksnake.snakefile import deserialize, read_snake, serialize, write_snake


def test_roundtrip(tmp_path, s5_snake, s7_snake):
    for snake in (s5_snake, s7_snake):
        path = tmp_path / f"w{snake.width}.snake"
        write_snake(snake, path)
        back = read_snake(path)
        assert back.n == snake.n
        assert back.construction == snake.construction
        assert back.initial == snake.initial
        assert back.transitions == snake.transitions
        assert back.declared_size == snake.size


def test_serialize_is_bit_stable(s5_snake):
    text = serialize(s5_snake)
    assert deserialize(text).transitions == s5_snake.transitions
    assert serialize(deserialize(text)) == text


def test_exact_format(s5_snake):
    text = serialize(s5_snake)
    lines = text.splitlines()
    assert lines[0] == "snake v1"
    assert lines[1] == "n=5 construction=he size=57"
    assert lines[2] == "3 4 5 1 2"
    assert len(lines[3].split()) == 57  # one short transition line
    assert text.endswith("\n")
    assert text.isascii()


def test_long_snakes_wrap_at_sixty(s7_snake):
    lines = serialize(s7_snake).splitlines()
    widths = {len(line.split()) for line in lines[3:-1]}
    assert widths == {60}
    assert len(lines[-1].split()) == 2515 % 60


@pytest.mark.parametrize(
    "mutate",
    [
        lambda t: t.replace("snake v1", "snake v2"),
        lambda t: t.replace("n=5", "n=6"),
        lambda t: t.replace("size=57", "size=fish"),
        lambda t: t.replace("3 4 5 1 2", "3 4 5 1 1"),
        lambda t: t.replace("\n5", "\n9", 1),  # out-of-range transition
        lambda t: t.replace("\n5", "\nx", 1),
        lambda t: "snake v1\n",
    ],
)
def test_parse_errors(mutate, s5_snake):
    with pytest.raises(SnakeFileError):
        deserialize(mutate(serialize(s5_snake)))


def test_read_missing_file(tmp_path):
    with pytest.raises(SnakeFileError):
        read_snake(tmp_path / "nope.snake")
