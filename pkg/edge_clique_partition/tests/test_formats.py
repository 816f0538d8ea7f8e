import pytest

from edge_clique_partition.formats import (
    InstanceFormatError,
    format_instance,
    format_mapping,
    format_solution,
    parse_instance,
    parse_mapping,
    parse_solution,
    read_instance,
    read_solution,
)
from edge_clique_partition.kernel import KernelLift
from edge_clique_partition.model import AwecpInstance, CliquePartition

from .util import make_tempdir, write_instance

TRIANGLE_TEXT = """# triangle
p awecp 3 3 1
e 1 2 1
e 1 3 1
e 2 3 1
"""


def test_parse_instance(triangle):
    assert parse_instance(TRIANGLE_TEXT) == triangle


def test_parse_annotated_instance():
    inst = parse_instance("p awecp 3 1 2\ne 2 1 2\n\na 3 4\na 1 0\n")
    assert inst.edges == ((0, 1, 2),)
    assert inst.annotated == {0: 0, 2: 4}
    assert inst.k == 2


def test_format_instance():
    inst = AwecpInstance(3, ((0, 1, 2),), {2: 1}, 2)
    text = format_instance(inst, ["generated"])
    assert text.splitlines() == ["# generated", "p awecp 3 1 2", "e 1 2 2", "a 3 1"]
    assert parse_instance(text) == inst


def test_read_instance(k5):
    with make_tempdir() as d:
        path = write_instance(d, "k5.awecp", k5)
        assert read_instance(path) == k5


@pytest.mark.parametrize(
    "text, line",
    [
        ("e 1 2 1\n", 1),
        ("p awecp 2 1 1\ne 1 3 1\n", 2),
        ("p awecp 2 1 1\ne 1 1 1\n", 2),
        ("p awecp 2 1 1\ne 1 2 0\n", 2),
        ("p awecp 2 2 1\ne 1 2 1\ne 2 1 1\n", 3),
        ("p awecp 2 1 1\n# comment\ne 1 x 1\n", 3),
        ("p awecp 2 0 1\na 1 -1\n", 2),
        ("p awecp 2 0 1\na 1 1\na 1 2\n", 3),
        ("p edge 2 0 1\n", 1),
        ("p awecp 2 0 1\np awecp 2 0 1\n", 2),
        ("p awecp 2 0 1\nx 1\n", 2),
    ],
)
def test_malformed_instance(text, line):
    with pytest.raises(InstanceFormatError) as excinfo:
        parse_instance(text)
    assert excinfo.value.line == line
    assert str(excinfo.value).startswith(f"line {line}: ")


@pytest.mark.parametrize("text", ["", "# only a comment\n", "p awecp 2 2 1\ne 1 2 1\n"])
def test_instance_without_line_number(text):
    with pytest.raises(InstanceFormatError) as excinfo:
        parse_instance(text)
    assert excinfo.value.line is None


def test_solution():
    sol = CliquePartition([[2, 0, 1], [3]])
    text = format_solution(sol)
    assert text == "s awecp 2\nc 1 2 3\nc 4\n"
    assert parse_solution(text) == CliquePartition([[0, 1, 2], [3]])


def test_no_solution():
    assert format_solution(None) == "s awecp NO\n"
    assert parse_solution("s awecp NO\n") is None
    with make_tempdir() as d:
        path = d / "no.sol"
        path.write_text("s awecp NO\n", encoding="utf8")
        assert read_solution(path) is None


@pytest.mark.parametrize(
    "text",
    [
        "c 1 2\n",
        "s awecp 2\nc 1 2\n",
        "s awecp NO\nc 1\n",
        "s awecp 1\nc\n",
        "s awecp 1\nc 0 1\n",
        "s awecp\n",
        "",
    ],
)
def test_malformed_solution(text):
    with pytest.raises(InstanceFormatError):
        parse_solution(text)


def test_mapping():
    lift = KernelLift(4, 2, (0, None, 1, 0))
    text = format_mapping(lift)
    assert text == "m 1 1\nm 2 0\nm 3 2\nm 4 1\n"
    assert parse_mapping(text) == lift


@pytest.mark.parametrize("text", ["m 1 1\nm 1 1\n", "m 2 1\n", "m 1\n", "x 1 1\n"])
def test_malformed_mapping(text):
    with pytest.raises(InstanceFormatError):
        parse_mapping(text)


@pytest.mark.parametrize(
    "text, line",
    [
        ("s awecp 1\nc 1 1 2\n", 2),
        ("s awecp 2\nc 1 2\n\nc 3 2 3\n", 4),
    ],
)
def test_solution_with_repeated_vertex(text, line):
    with pytest.raises(InstanceFormatError) as excinfo:
        parse_solution(text)
    assert excinfo.value.line == line
    assert "repeated" in str(excinfo.value)
