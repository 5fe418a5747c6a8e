import pytest

from config import GlobalConfig
from generator import GeneratorInterface
from graph_statistics import JointCounts, StatisticsInterface, census_of_history
from multigraph import AttachmentHistory, MultiGraphInterface

GlobalConfig.DEBUG_MODE = True

statistics = StatisticsInterface()
graphs = MultiGraphInterface()


@pytest.mark.parametrize(
    "targets,expected",
    [
        ([1, 1, 2], {1: 1, 2: 1, 3: 1}),
        ([1], {2: 1}),
        ([], {}),
    ],
)
def test_degree_histogram(targets, expected):
    assert statistics.degree_histogram(graphs.from_history(targets)) == expected


@pytest.mark.parametrize(
    "targets,expected",
    [
        ([1, 1, 2], {1: 2, 2: 1}),
        ([1], {0: 1}),
        ([1, 1], {0: 1, 2: 1}),
    ],
)
def test_second_degree_histogram(targets, expected):
    assert statistics.second_degree_histogram(graphs.from_history(targets)) == expected


@pytest.mark.parametrize(
    "targets,N,P",
    [
        ([1, 1, 2], {(2, 2): 1, (1, 1): 1}, {(3, 1): 1}),
        ([1], {}, {(2, 0): 1}),
        ([1, 2], {}, {(2, 0): 2}),
        ([], {}, {}),
    ],
)
def test_joint_counts(targets, N, P):
    counts = statistics.joint_counts(graphs.from_history(targets))
    assert counts.N == N
    assert counts.P == P
    assert counts.violations() == []


def test_census_identities_on_random_graphs():
    generator = GeneratorInterface()
    for seed in range(5):
        history = generator.generate(2000, seed)
        counts = census_of_history(history)
        assert counts.violations() == []
        assert sum(counts.secdeg_hist.values()) == 2000
        for k in counts.secdeg_hist:
            column = sum(c for (_, j), c in counts.N.items() if j == k)
            column += sum(c for (_, j), c in counts.P.items() if j == k)
            assert counts.x(k) == column


def test_census_of_collapsed_graph():
    graph = GeneratorInterface().generate_collapsed(500, 3, 1)
    counts = statistics.joint_counts(graph)
    assert counts.violations(edge_count=graph.edge_count) == []
    assert sum(d * c for d, c in counts.degree_hist.items()) == 3000


def test_violations_report_broken_census():
    broken = JointCounts(n=2, N={(1, 0): 1}, P={}, degree_hist={1: 2}, secdeg_hist={0: 1})
    problems = broken.violations()
    assert "N and P do not add up to n" in problems
    assert "degree histogram violates the handshake identity" in problems
    assert any(p.startswith("N(1,0)") for p in problems)


def test_merge_adds_cells():
    a = census_of_history(AttachmentHistory([1, 1, 2]))
    b = census_of_history(AttachmentHistory([1, 2]))
    merged = a.merge(b)
    assert merged.n == 5
    assert merged.P == {(3, 1): 1, (2, 0): 2}
    assert merged.x(1) == 2
    assert merged.x(0) == 2


def test_rows_layout():
    rows = census_of_history(AttachmentHistory([1, 1, 2])).to_rows()
    assert rows == [
        ("N", 1, 1, 1),
        ("N", 2, 2, 1),
        ("P", 3, 1, 1),
        ("deg", 0, 1, 1),
        ("deg", 0, 2, 1),
        ("deg", 0, 3, 1),
        ("secdeg", 0, 1, 2),
        ("secdeg", 0, 2, 1),
    ]
