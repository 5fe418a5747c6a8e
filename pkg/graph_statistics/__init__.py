from .interface import StatisticsInterface
from .joint_counts import JointCounts
from .census import (
    census_of_history,
    degree_histogram,
    joint_counts,
    second_degree_histogram,
)

__all__ = [
    "StatisticsInterface",
    "JointCounts",
    "census_of_history",
    "degree_histogram",
    "joint_counts",
    "second_degree_histogram",
]
