import time
from collections import Counter
from math import prod, sqrt

import numpy as np
import pytest

from config import GlobalConfig
from generator import GeneratorInterface, GeneratorState, slot_histories
from generator.errors import GeneratorStateError
from graph_statistics import census_of_history
from multigraph import MultiGraph
from oracle import enumerate_exact

GlobalConfig.DEBUG_MODE = True

interface = GeneratorInterface()


def test_first_step_is_a_loop():
    for seed in range(20):
        assert interface.generate(1, seed).to_list() == [1]


def test_empty_history():
    assert interface.generate(0, 7).n == 0


def test_stepwise_and_vectorized_agree():
    for seed in (0, 1, 12345):
        state = interface.new_state(seed)
        stepwise = [interface.attach_step(state) for _ in range(200)]
        assert interface.generate(200, seed).to_list() == stepwise


def test_same_seed_same_history():
    assert interface.generate(1000, 99) == interface.generate(1000, 99)
    assert interface.generate(1000, 99) != interface.generate(1000, 100)


def test_replicate_seeds_are_independent_of_each_other():
    first = interface.generate(500, interface.replicate_seed(5, 0))
    second = interface.generate(500, interface.replicate_seed(5, 1))
    assert first != second
    assert first == interface.generate(500, interface.replicate_seed(5, 0))


def test_handshake_at_scale():
    history = interface.generate(10**5, 3)
    graph = MultiGraph.from_history(history)
    assert int(graph.degrees.sum()) == 2 * 10**5


def test_collapsed_edge_count():
    graph = interface.generate_collapsed(10**4, 3, 11)
    assert graph.n == 10**4
    assert graph.edge_count == 3 * 10**4
    assert int(graph.degrees.sum()) == 6 * 10**4


def test_collapsed_single_vertex():
    graph = interface.generate_collapsed(1, 2, 4)
    assert graph.n == 1
    assert graph.degree(1) == 4


def test_state_degrees_count_slots():
    state = GeneratorState(8)
    for _ in range(50):
        state.attach_step()
    degrees = state.degree_counts()
    assert degrees.sum() == 100
    assert (degrees[1:] >= 1).all()


@pytest.mark.parametrize("seed", [-1, 2**64, 1.5, True])
def test_bad_seed(seed):
    with pytest.raises(GeneratorStateError):
        interface.generate(3, seed)


def test_slot_histories_cover_the_distribution():
    histories = list(slot_histories(4))
    assert len(histories) == 1 * 3 * 5 * 7
    counts = Counter(tuple(h.to_list()) for h in histories)
    # loop at 2 is one slot out of three at step 2
    assert sum(c for h, c in counts.items() if h[1] == 2) == len(histories) // 3


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_slot_histories_count(n):
    assert sum(1 for _ in slot_histories(n)) == prod(range(1, 2 * n, 2))


@pytest.mark.slow
def test_loop_at_two_frequency():
    samples = 10**5
    loops = sum(
        interface.generate(2, interface.replicate_seed(2024, r)).target(2) == 2
        for r in range(samples)
    )
    tolerance = 5 * sqrt(2 / 9 / samples)
    assert abs(loops / samples - 1 / 3) < tolerance


def test_second_step_probabilities_from_state():
    hits = np.zeros(3, dtype=np.int64)
    for seed in range(3000):
        state = GeneratorState(seed)
        state.attach_step()
        hits[state.attach_step()] += 1
    assert abs(hits[1] / 3000 - 2 / 3) < 0.05


@pytest.mark.slow
def test_joint_counts_match_enumeration():
    n, samples = 5, 10**6
    expected = enumerate_exact(n)
    shape = (expected.lmax + 1, expected.kmax + 1)
    totals = {"N": np.zeros(shape), "P": np.zeros(shape)}
    squares = {"N": np.zeros(shape), "P": np.zeros(shape)}
    for r in range(samples):
        counts = census_of_history(interface.generate(n, interface.replicate_seed(77, r)))
        for name, cells in (("N", counts.N), ("P", counts.P)):
            for (l, k), count in cells.items():
                totals[name][l, k] += count
                squares[name][l, k] += count * count

    for name, table in (("N", expected.EN), ("P", expected.EP)):
        exact = table.astype(float)
        mean = totals[name] / samples
        variance = squares[name] / samples - mean**2
        se = np.sqrt(np.maximum(variance, 0) / samples)
        # cells never seen still get one sample's worth of resolution
        allowance = 5 * np.maximum(se, 1 / samples)
        off = np.argwhere(np.abs(mean - exact) > allowance)
        assert off.size == 0, (name, off.tolist())


@pytest.mark.slow
def test_ten_million_vertices_in_time():
    started = time.perf_counter()
    history = interface.generate(10**7, 31)
    generated = time.perf_counter()
    second = MultiGraph.from_history(history).second_degrees
    finished = time.perf_counter()

    assert generated - started < 5
    assert finished - generated < 10
    assert second.shape[0] >= 10**7
