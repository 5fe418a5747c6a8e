from typing import Iterable

import numpy as np

from .errors import InvalidHistoryError


class AttachmentHistory:
    """
    The target sequence of one realisation of G_1^n.

    targets[t - 1] is the vertex that vertex t attached to. Vertices are 1-based,
    so every entry satisfies 1 <= targets[t - 1] <= t. n = 0 is the empty graph.
    """

    def __init__(self, targets: Iterable[int] | np.ndarray):
        array = np.asarray(
            targets if isinstance(targets, np.ndarray) else list(targets),
            dtype=np.int64,
        )
        if array.ndim != 1:
            raise InvalidHistoryError(
                f"targets must be one-dimensional, received shape {array.shape}"
            )

        steps = np.arange(1, array.shape[0] + 1, dtype=np.int64)
        bad = (array < 1) | (array > steps)
        if bad.any():
            t = int(np.flatnonzero(bad)[0]) + 1
            raise InvalidHistoryError(
                f"vertex {t} attached to {int(array[t - 1])}, expected a target in [1, {t}]"
            )

        array.setflags(write=False)
        self._targets = array

    @property
    def n(self) -> int:
        return int(self._targets.shape[0])

    @property
    def targets(self) -> np.ndarray:
        return self._targets

    def target(self, t: int) -> int:
        return int(self._targets[t - 1])

    def to_list(self) -> list[int]:
        return self._targets.tolist()

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, AttachmentHistory):
            return NotImplemented
        return np.array_equal(self._targets, other._targets)

    def __hash__(self) -> int:
        return hash(self._targets.tobytes())

    def __repr__(self) -> str:
        preview = self._targets[:8].tolist()
        suffix = ", ..." if self.n > 8 else ""
        return f"AttachmentHistory(n={self.n}, targets={preview}{suffix})"
