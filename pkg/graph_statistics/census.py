import numpy as np

from multigraph import AttachmentHistory, MultiGraph
from .joint_counts import JointCounts


def _histogram(values: np.ndarray) -> dict[int, int]:
    keys, counts = np.unique(values, return_counts=True)
    return dict(zip(keys.tolist(), counts.tolist()))


def _joint(degrees: np.ndarray, second: np.ndarray) -> dict[tuple[int, int], int]:
    if not degrees.size:
        return {}
    width = int(second.max()) + 1
    keys, counts = np.unique(degrees * width + second, return_counts=True)
    return {
        (int(key // width), int(key % width)): int(count)
        for key, count in zip(keys.tolist(), counts.tolist())
    }


def degree_histogram(graph: MultiGraph) -> dict[int, int]:
    """#(d) for every degree that occurs."""
    return _histogram(graph.degrees[1:])


def second_degree_histogram(graph: MultiGraph) -> dict[int, int]:
    """X_n(k) for every second degree that occurs, looped vertices included."""
    return _histogram(graph.second_degrees[1:])


def joint_counts(graph: MultiGraph) -> JointCounts:
    degrees = graph.degrees[1:]
    second = graph.second_degrees[1:]
    looped = graph.loops[1:] > 0

    return JointCounts(
        n=graph.n,
        N=_joint(degrees[~looped], second[~looped]),
        P=_joint(degrees[looped], second[looped]),
        degree_hist=_histogram(degrees),
        secdeg_hist=_histogram(second),
    )


def census_of_history(history: AttachmentHistory) -> JointCounts:
    return joint_counts(MultiGraph.from_history(history))
