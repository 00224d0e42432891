import itertools
import json

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from tfextremal.formats import (
    GraphFormatError,
    from_json,
    graph6_decode,
    graph6_encode,
    parse_graph_text,
    to_dot,
    to_json,
)
from tfextremal.graph import Graph


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def test_known_encodings():
    assert graph6_encode(Graph(2, [(0, 1)])) == "A_"
    assert graph6_encode(Graph(0)) == "?"
    assert graph6_encode(Graph(1)) == "@"
    assert graph6_decode(graph6_encode(cycle(5))) == cycle(5)


def test_header_accepted():
    assert graph6_decode(">>graph6<<A_") == Graph(2, [(0, 1)])


def test_large_vertex_count_forms():
    g = Graph(70, [(0, 69), (5, 6)])
    s = graph6_encode(g)
    assert s.startswith("~") and not s.startswith("~~")
    assert graph6_decode(s) == g
    assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


@pytest.mark.parametrize(
    "text, offset",
    [("A", 1), ("A_x", 2), ("A\x01", 1), ("~?", 2), ("", 0)],
)
def test_decode_errors_name_offsets(text, offset):
    with pytest.raises(GraphFormatError) as exc:
        graph6_decode(text)
    assert exc.value.offset == offset
    assert f"byte offset {offset}" in str(exc.value)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 20).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
))
def test_graph6_matches_networkx(arg):
    n, mask = arg
    pairs = list(itertools.combinations(range(n), 2))
    g = Graph(n, [p for p, keep in zip(pairs, mask) if keep])
    s = graph6_encode(g)
    assert graph6_decode(s) == g
    assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    back = nx.from_graph6_bytes(s.encode())
    assert sorted(tuple(sorted(e)) for e in back.edges()) == g.edges()


def test_json_and_dot():
    g = Graph(4, [(2, 1), (0, 3)])
    obj = json.loads(to_json(g))
    assert obj == {"n": 4, "edges": [[0, 3], [1, 2]]}
    assert from_json(to_json(g)) == g
    dot = to_dot(Graph(3, [(0, 1)]))
    assert "0 -- 1;" in dot and "  2;" in dot


def test_parse_graph_text():
    assert parse_graph_text('{"n": 2, "edges": [[0, 1]]}') == Graph(2, [(0, 1)])
    assert parse_graph_text("A_\n") == Graph(2, [(0, 1)])
    with pytest.raises(GraphFormatError):
        parse_graph_text("A_\nA_\n")
    with pytest.raises(ValueError):
        parse_graph_text('{"n": 2}')
