from .interface import MultiGraphInterface
from .history import AttachmentHistory
from .multigraph import MultiGraph
from .edge_list import load_edge_list, read_edge_list, write_edge_list

__all__ = [
    "MultiGraphInterface",
    "AttachmentHistory",
    "MultiGraph",
    "load_edge_list",
    "read_edge_list",
    "write_edge_list",
]
