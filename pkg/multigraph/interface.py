from pathlib import Path
from typing import Iterable

from .edge_list import load_edge_list, write_edge_list
from .history import AttachmentHistory
from .multigraph import MultiGraph


class MultiGraphInterface:

    def from_history(self, history: AttachmentHistory | Iterable[int]) -> MultiGraph:
        if not isinstance(history, AttachmentHistory):
            history = AttachmentHistory(history)
        return MultiGraph.from_history(history)

    def degree(self, graph: MultiGraph, v: int) -> int:
        return graph.degree(v)

    def second_degree(self, graph: MultiGraph, v: int) -> int:
        return graph.second_degree(v)

    def has_loop(self, graph: MultiGraph, v: int) -> bool:
        return graph.has_loop(v)

    def collapse(self, graph: MultiGraph, m: int) -> MultiGraph:
        return graph.collapse(m)

    def load(self, path: str | Path) -> MultiGraph:
        """
        Load an edge-list file and return the graph it describes, collapsed when
        the file records a block size.
        """
        history, block_size = load_edge_list(path)
        return MultiGraph.from_history(history).collapse(block_size)

    def save(self, history: AttachmentHistory, path: str | Path, block_size: int = 1):
        write_edge_list(history, path, block_size=block_size)
