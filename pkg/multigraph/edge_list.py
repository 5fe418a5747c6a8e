# edge-list layout:
#   # pa-secdeg v1 n=<n>[ m=<m>]
#   t<TAB>target        one line per vertex t = 1..n
import re
from pathlib import Path

import numpy as np

from config import GlobalConfig
from .errors import EdgeListFormatError, InvalidHistoryError
from .history import AttachmentHistory

HEADER_PATTERN = re.compile(r"^# (?P<tag>pa-secdeg v\d+) n=(?P<n>\d+)(?: m=(?P<m>\d+))?$")


def write_edge_list(history: AttachmentHistory, path: str | Path, block_size: int = 1):
    """
    Write a history in the edge-list format. The block size is only recorded
    when it is not 1, so G_1 files keep the plain header.

    Args:
        history (AttachmentHistory): history of G_1^n (for G_m this is G_1^{mn})
        path (str | Path): output file
        block_size (int, optional): collapse parameter m. Defaults to 1.
    """
    header = f"# {GlobalConfig.VERSION_TAG} n={history.n}"
    if block_size != 1:
        header += f" m={block_size}"

    rows = np.column_stack(
        [np.arange(1, history.n + 1, dtype=np.int64), history.targets]
    )
    with open(path, "w") as handle:
        handle.write(header + "\n")
        np.savetxt(handle, rows, fmt="%d", delimiter="\t")


def load_edge_list(path: str | Path) -> tuple[AttachmentHistory, int]:
    """
    Read an edge-list file.

    Returns:
        tuple[AttachmentHistory, int]: the history and the block size m

    Raises:
        EdgeListFormatError: on a bad header, wrong vertex numbering or bad targets
    """
    with open(path) as handle:
        header = handle.readline().rstrip("\n")
        match = HEADER_PATTERN.match(header)
        if not match or match.group("tag") != GlobalConfig.VERSION_TAG:
            raise EdgeListFormatError(f"unrecognised edge-list header: {header!r}")

        n = int(match.group("n"))
        block_size = int(match.group("m") or 1)

        try:
            rows = np.loadtxt(handle, dtype=np.int64, delimiter="\t", ndmin=2)
        except ValueError as e:
            raise EdgeListFormatError(f"malformed edge-list body: {e}") from e

    if n == 0 and rows.size == 0:
        return AttachmentHistory([]), block_size

    if rows.shape != (n, 2):
        raise EdgeListFormatError(
            f"header announces {n} vertices but the body has shape {rows.shape}"
        )
    if not np.array_equal(rows[:, 0], np.arange(1, n + 1)):
        raise EdgeListFormatError("vertices must be listed as 1..n in order")

    try:
        history = AttachmentHistory(rows[:, 1])
    except InvalidHistoryError as e:
        raise EdgeListFormatError(str(e)) from e

    return history, block_size


def read_edge_list(path: str | Path) -> AttachmentHistory:
    history, _ = load_edge_list(path)
    return history
