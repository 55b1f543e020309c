import pytest

from arithtutte.exceptions import PreconditionError
from arithtutte.graphs import (
    LabeledGraph,
    forest_count,
    graph_m_tutte,
    graph_to_vectors,
    spanning_tree_count,
)
from arithtutte.polynomial import BivariatePolynomial
from arithtutte.tutte import ordinary_tutte
from corpus import labeled_graphs, simple_graphs
from oracles import brute_forests, brute_spanning_trees, graph_m_tutte_reference, kirchhoff

x, y = BivariatePolynomial.x(), BivariatePolynomial.y()
TRI = lambda a, b, c: LabeledGraph(3, ((0, 1, a), (1, 2, b), (0, 2, c)))  # noqa: E731


def test_examples():
    assert graph_m_tutte(LabeledGraph(2, ((0, 1, 3),))) == x + 2
    assert graph_m_tutte(TRI(1, 1, 2)) == x**2 + 2 * x + 2 * y
    assert graph_m_tutte(TRI(1, 1, 1)) == x**2 + x + y
    assert graph_m_tutte(TRI(1, 1, 2), "deletion_contraction") == x**2 + 2 * x + 2 * y


def test_counts():
    assert spanning_tree_count(LabeledGraph(2, ((0, 1, 2),))) == 2
    assert spanning_tree_count(TRI(1, 1, 2)) == 5
    assert spanning_tree_count(TRI(1, 1, 1)) == 3
    assert forest_count(LabeledGraph(2, ((0, 1, 2),))) == 3
    assert forest_count(TRI(1, 1, 1)) == 7
    assert forest_count(LabeledGraph(4, ())) == 1


def test_disconnected_rejected():
    with pytest.raises(PreconditionError, match="connected"):
        spanning_tree_count(LabeledGraph(3, ((0, 1, 1),)))


def test_vector_realization():
    V = graph_to_vectors(TRI(1, 1, 1))
    assert V.free_vectors == [(1, -1, 0), (0, 1, -1), (1, 0, -1)]
    assert ordinary_tutte(V) == x**2 + x + y
    assert ordinary_tutte(graph_to_vectors(LabeledGraph(3, ((0, 1, 1), (1, 2, 1))))) == x**2
    assert ordinary_tutte(graph_to_vectors(LabeledGraph(1, ()))) == 1
    for bad in (TRI(1, 2, 1), LabeledGraph(2, ((0, 0, 1),)), LabeledGraph(2, ((0, 1, 1), (1, 0, 1)))):
        with pytest.raises(PreconditionError):
            graph_to_vectors(bad)


def test_invalid_graphs():
    with pytest.raises(ValueError):
        LabeledGraph(2, ((0, 2, 1),))
    with pytest.raises(ValueError):
        LabeledGraph(2, ((0, 1, 0),))


def test_json_round_trip():
    G = LabeledGraph.from_json('{"vertices": 3, "edges": [[0, 1, 2], [1, 2]]}')
    assert G.edges == ((0, 1, 2), (1, 2, 1))
    assert LabeledGraph.from_json(G.to_json()) == G


GRAPHS = labeled_graphs(80, seed=71)


@pytest.mark.parametrize("G", GRAPHS, ids=lambda G: str(G.to_json()))
def test_random_labeled(G):
    M = graph_m_tutte(G)
    assert M == graph_m_tutte(G, "deletion_contraction")
    assert M.coeffs == graph_m_tutte_reference(G)
    assert forest_count(G) == brute_forests(G)
    if G.is_connected():
        assert spanning_tree_count(G) == brute_spanning_trees(G) == kirchhoff(G)


@pytest.mark.parametrize(
    "graph, expected",
    [
        # (x-1)^2 + 9(x-1) + 27 + 27(y-1)
        ({"vertices": 3, "edges": [[0, 1, 3], [1, 2, 3], [0, 2, 3]]}, {(2, 0): 1, (1, 0): 7, (0, 1): 27, (0, 0): -8}),
        # (x-1) + 4 + 4(y-1)
        ({"vertices": 2, "edges": [[0, 1, 2], [0, 1, 2]]}, {(1, 0): 1, (0, 1): 4, (0, 0): -1}),
        # a loop of label 2 alone: 1 + 2(y-1)
        ({"vertices": 1, "edges": [[0, 0, 2]]}, {(0, 1): 2, (0, 0): -1}),
    ],
)
def test_labels_can_produce_negative_coefficients(graph, expected):
    G = LabeledGraph.from_json(graph)
    M = graph_m_tutte(G)
    assert M.coeffs == expected
    assert M == graph_m_tutte(G, "deletion_contraction")
    assert forest_count(G) == brute_forests(G)


@pytest.mark.parametrize("G", GRAPHS, ids=lambda G: str(G.to_json()))
def test_unit_labels_positive(G):
    H = LabeledGraph(G.vertices, tuple((u, v, 1) for u, v, _ in G.edges))
    assert all(c > 0 for c in graph_m_tutte(H).coeffs.values())


def test_random_simple():
    for G in simple_graphs(40, seed=72):
        assert graph_m_tutte(G) == ordinary_tutte(graph_to_vectors(G))
