from multigraph import AttachmentHistory, MultiGraph
from .census import (
    census_of_history,
    degree_histogram,
    joint_counts,
    second_degree_histogram,
)
from .joint_counts import JointCounts


class StatisticsInterface:

    def degree_histogram(self, graph: MultiGraph) -> dict[int, int]:
        return degree_histogram(graph)

    def second_degree_histogram(self, graph: MultiGraph) -> dict[int, int]:
        return second_degree_histogram(graph)

    def joint_counts(self, graph: MultiGraph) -> JointCounts:
        return joint_counts(graph)

    def census_of_history(self, history: AttachmentHistory) -> JointCounts:
        return census_of_history(history)
