import pytest

from conftest import CORPUS
from racg_growth.graph import complete_graph, generate_family
from racg_growth.graphfile import GraphFileError, parse_graph_file, write_graph_file


def test_parse_examples():
    assert parse_graph_file("3\n0 1\n1 2\n0 2\n") == complete_graph(3)
    assert parse_graph_file("2\n") == generate_family("discrete:2")


def test_comments_and_blank_lines():
    text = "# a triangle\n\n3  # vertices\n0 1\n# skip\n2 1\n0 2 # last\n"
    assert parse_graph_file(text) == complete_graph(3)


@pytest.mark.parametrize(
    "text, message, line",
    [
        ("3\n0 0\n", "loop at line 2", 2),
        ("3\n0 1\n1 0\n", "duplicate edge", 3),
        ("3\n0 3\n", "out of range", 2),
        ("3\n0 x\n", "malformed token 'x'", 2),
        ("3\n0 1 2\n", "two vertex indices", 2),
        ("3 4\n", "single vertex count", 1),
        ("# nothing\n", "missing vertex count", None),
        ("-1\n", "negative", 1),
    ],
)
def test_parse_errors(text, message, line):
    with pytest.raises(GraphFileError) as info:
        parse_graph_file(text)
    assert message in str(info.value)
    assert info.value.line == line


def test_writer_sorts_edges():
    g = parse_graph_file("4\n3 2\n1 0\n2 0\n")
    assert write_graph_file(g) == "4\n0 1\n0 2\n2 3\n"
    assert write_graph_file(generate_family("discrete:4")) == "4\n"


def test_round_trip(corpus_graph):
    _, g = corpus_graph
    assert parse_graph_file(write_graph_file(g)) == g
