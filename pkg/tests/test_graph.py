from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from reliab.graph import (
    Edge,
    Graph,
    GraphFormatError,
    bundle_graph,
    complete_graph,
    contract_edge,
    cycle_graph,
    delete_edge,
    is_bridge,
    kappa,
    parse_graph,
    parse_rational,
    path_graph,
    serialize_graph,
    split_components,
)


def test_parse_k2():
    g = parse_graph("2 1\n0 1")
    assert g.n == 2 and g.m == 1
    assert g.edges[0] == Edge(0, 1, Fraction(1))


def test_parse_c5(c5):
    assert parse_graph("5 5\n0 1\n1 2\n2 3\n3 4\n4 0") == c5


def test_parse_weights_and_comments():
    g = parse_graph("# a path\n3 2\n0 1 1/1\n# middle\n1 2 3/1\n")
    assert g.weights == (1, 3)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n0 1",
        "2 1\n0",
        "2 1\n0 2",
        "2 1\n0 1 x",
        "2 1\n0 1 1/0",
        "2 1\n0 1 0.5",
        "2 2\n0 1",
        "a b",
        "2 1\n0 1 1 1",
    ],
)
def test_parse_rejects(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_parse_rational():
    assert parse_rational("6/4") == Fraction(3, 2)
    assert parse_rational("-2") == -2
    with pytest.raises(ValueError):
        parse_rational("1e3")


def test_serialize_format():
    g = Graph.from_edges(3, [(0, 1, 1), (1, 2, Fraction(6, 4)), (2, 2, -2)])
    assert serialize_graph(g) == "3 3\n0 1\n1 2 3/2\n2 2 -2/1\n"


weights = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def multigraphs(draw, max_n=6, max_m=10):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, max_m))
    es = [(draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1)), draw(weights)) for _ in range(m)]
    return Graph.from_edges(n, es)


@given(multigraphs())
def test_roundtrip(g):
    assert parse_graph(serialize_graph(g)) == g


@given(multigraphs(), st.data())
def test_kappa_monotone(g, data):
    subset = data.draw(st.sets(st.integers(0, max(g.m - 1, 0)), max_size=g.m)) if g.m else set()
    assert kappa(g, subset) >= kappa(g)
    assert (kappa(g) == 1) == g.is_connected()


@given(multigraphs())
def test_bridge_deletion_changes_kappa(g):
    for e in range(g.m):
        expected = kappa(g) + (1 if is_bridge(g, e) else 0)
        assert kappa(delete_edge(g, e)) == expected


def test_kappa_examples(c5):
    assert kappa(c5, range(5)) == 1
    assert kappa(c5, []) == 5
    assert kappa(c5, {0, 1}) == 3
    with pytest.raises(IndexError):
        kappa(c5, [5])


def test_bridges(c5):
    p = path_graph(2)
    assert is_bridge(p, 0) and is_bridge(p, 1)
    assert not any(is_bridge(c5, e) for e in range(5))
    doubled = bundle_graph(2)
    assert not is_bridge(doubled, 0) and not is_bridge(doubled, 1)


def test_contract_triangle():
    g = contract_edge(complete_graph(3), 0)
    assert g.n == 2
    assert g.topology() == [(0, 1), (0, 1)]


def test_contract_renumbers():
    g = Graph.from_edges(4, [(1, 3), (0, 3), (2, 3), (0, 2)])
    h = contract_edge(g, 0)
    # 3 merges into 1; 2 keeps id 2
    assert h.n == 3
    assert [(e.u, e.v) for e in h.edges] == [(0, 1), (2, 1), (0, 2)]


def test_delete_from_cycle(c5):
    g = delete_edge(c5, 4)
    assert g == path_graph(4)


def test_contract_loop():
    g = Graph.from_edges(2, [(0, 1), (1, 1, 5)])
    assert contract_edge(g, 1) == Graph.from_edges(2, [(0, 1)])


def test_split_components():
    g = Graph.from_edges(5, [(0, 3), (1, 4), (4, 2)])
    parts = split_components(g)
    assert [(p.n, p.m) for p in parts] == [(2, 1), (3, 2)]


def test_graph_validates_endpoints():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_simple():
    assert cycle_graph(5).is_simple()
    assert not bundle_graph(2).is_simple()
    assert not Graph.from_edges(1, [(0, 0)]).is_simple()
