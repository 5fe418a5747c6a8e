import numpy as np
import pytest

from config import GlobalConfig
from multigraph import AttachmentHistory, MultiGraph, MultiGraphInterface
from multigraph.errors import BlockSizeError, InvalidHistoryError, UnknownVertexError

GlobalConfig.DEBUG_MODE = True

interface = MultiGraphInterface()


@pytest.mark.parametrize(
    "targets,v,expected",
    [
        ([1], 1, 2),
        ([1, 1, 2], 1, 3),
        ([1, 1, 2], 2, 2),
        ([1, 1, 2], 3, 1),
    ],
)
def test_degree(targets, v, expected):
    graph = interface.from_history(targets)
    assert interface.degree(graph, v) == expected


@pytest.mark.parametrize(
    "targets,v,expected",
    [
        ([1, 1, 2], 3, 1),
        ([1, 1, 2], 2, 2),
        ([1, 1, 2], 1, 1),
        ([1], 1, 0),
        ([1, 1], 1, 0),
        ([1, 1], 2, 2),
        ([1, 2], 2, 0),
    ],
)
def test_second_degree(targets, v, expected):
    graph = interface.from_history(targets)
    assert interface.second_degree(graph, v) == expected


@pytest.mark.parametrize(
    "targets,v,expected",
    [([1], 1, True), ([1, 1, 2], 2, False), ([1, 2], 2, True)],
)
def test_has_loop(targets, v, expected):
    assert interface.has_loop(interface.from_history(targets), v) is expected


def test_empty_graph():
    graph = interface.from_history([])
    assert graph.n == 0
    assert graph.edge_count == 0
    assert graph.second_degrees[1:].size == 0


@pytest.mark.parametrize("targets", [[2], [1, 3], [0], [1, 1, 4]])
def test_invalid_history(targets):
    with pytest.raises(InvalidHistoryError):
        AttachmentHistory(targets)


def test_unknown_vertex():
    graph = interface.from_history([1, 1])
    with pytest.raises(UnknownVertexError):
        graph.degree(3)
    with pytest.raises(UnknownVertexError):
        graph.second_degree(0)


def test_collapse_blocks():
    graph = interface.collapse(interface.from_history([1, 1, 2, 3]), 2)
    assert graph.n == 2
    assert graph.edge_count == 4
    assert graph.degree(1) == 5
    assert graph.degree(2) == 3
    assert graph.loop_count(1) == 2
    assert graph.loop_count(2) == 1


def test_collapse_two_loops():
    graph = interface.collapse(interface.from_history([1, 1]), 2)
    assert graph.n == 1
    assert graph.degree(1) == 4
    assert graph.second_degree(1) == 0


def test_collapse_identity():
    graph = interface.from_history([1, 1, 2, 3, 1])
    assert interface.collapse(graph, 1) is graph


@pytest.mark.parametrize("m", [0, 3])
def test_collapse_rejects_bad_block(m):
    with pytest.raises(BlockSizeError):
        interface.from_history([1, 1, 2, 3]).collapse(m)


def test_vectorized_second_degrees_match_neighbour_walk():
    targets = [1, 1, 2, 1, 4, 4, 7, 2, 9, 1, 3, 11]
    for m in (1, 2, 3):
        graph = MultiGraph.from_history(AttachmentHistory(targets)).collapse(m)
        for v in range(1, graph.n + 1):
            walked = sum(graph.degree(q) for q in graph.neighbors(v) if q != v)
            expected = walked - (graph.degree(v) - 2 * graph.loop_count(v))
            assert graph.second_degrees[v] == expected


def test_handshake_and_leaf_identity():
    targets = [1, 1, 2, 1, 4, 4, 7, 2, 9, 1]
    graph = interface.from_history(targets)
    assert int(np.sum(graph.degrees)) == 2 * len(targets)
    for v in range(1, graph.n + 1):
        if graph.degree(v) == 1 and not graph.has_loop(v):
            (q,) = graph.neighbors(v)
            assert graph.second_degree(v) == graph.degree(q) - 1
