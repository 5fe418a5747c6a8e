from functools import cached_property

import numpy as np

from .errors import BlockSizeError, UnknownVertexError
from .history import AttachmentHistory


class MultiGraph:
    """
    Immutable multigraph with loops and multi-edges.

    Vertices are 1..n. Internally every per-vertex array has length n + 1 and
    index 0 is unused, so numpy indexing matches the vertex labels.

    Degrees count a loop twice. The second degree of v is the number of
    half-edges at the distinct neighbours of v (v itself excluded) that are not
    paired with v.
    """

    def __init__(
        self,
        n: int,
        heads: np.ndarray,
        tails: np.ndarray,
        block_size: int = 1,
        simple: bool = False,
    ):
        """
        Args:
            n (int): vertex count
            heads (np.ndarray): first endpoint of every edge
            tails (np.ndarray): second endpoint of every edge
            block_size (int): how many G_1 vertices each vertex stands for
            simple (bool): set when no two non-loop edges join the same pair,
                which lets second degrees skip the neighbour de-duplication
        """
        heads = np.asarray(heads, dtype=np.int64)
        tails = np.asarray(tails, dtype=np.int64)
        if heads.shape != tails.shape:
            raise ValueError("heads and tails must have the same length")
        if heads.size and (
            min(heads.min(), tails.min()) < 1 or max(heads.max(), tails.max()) > n
        ):
            raise UnknownVertexError(f"edge endpoint outside 1..{n}")

        heads.setflags(write=False)
        tails.setflags(write=False)

        self._n = int(n)
        self._heads = heads
        self._tails = tails
        self._block_size = int(block_size)
        self._simple = simple

        degree = np.bincount(heads, minlength=n + 1) + np.bincount(
            tails, minlength=n + 1
        )
        loops = np.bincount(heads[heads == tails], minlength=n + 1)
        self._degree = degree.astype(np.int64)
        self._loops = loops.astype(np.int64)
        self._degree.setflags(write=False)
        self._loops.setflags(write=False)

    @classmethod
    def from_history(cls, history: AttachmentHistory) -> "MultiGraph":
        """
        Build G_1^n from its attachment history: one edge (t, targets[t]) per vertex.
        """
        n = history.n
        heads = np.arange(1, n + 1, dtype=np.int64)
        # vertex t creates the only edge between t and an earlier vertex
        return cls(n, heads, history.targets.copy(), block_size=1, simple=True)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return int(self._heads.shape[0])

    @property
    def block_size(self) -> int:
        return self._block_size

    @property
    def edges(self) -> np.ndarray:
        return np.stack([self._heads, self._tails], axis=1)

    @property
    def degrees(self) -> np.ndarray:
        """Degree of every vertex, indexed 1..n (index 0 is unused and zero)."""
        return self._degree

    @property
    def loops(self) -> np.ndarray:
        return self._loops

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self._degree[v])

    def loop_count(self, v: int) -> int:
        self._check_vertex(v)
        return int(self._loops[v])

    def has_loop(self, v: int) -> bool:
        return self.loop_count(v) > 0

    def neighbors(self, v: int) -> list[int]:
        """
        Distinct neighbours of v in increasing order, v excluded.
        """
        self._check_vertex(v)
        incident = (self._heads == v) | (self._tails == v)
        others = np.where(
            self._heads[incident] == v, self._tails[incident], self._heads[incident]
        )
        others = np.unique(others)
        return others[others != v].tolist()

    def second_degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self.second_degrees[v])

    @cached_property
    def second_degrees(self) -> np.ndarray:
        """
        Second degree of every vertex, indexed 1..n.

        d2(v) = sum of d(q) over distinct neighbours q != v, minus the number of
        non-loop half-edges at v (each of those is paired with a half-edge at a
        neighbour).
        """
        n = self._n
        nonloop = self._heads != self._tails
        a = self._heads[nonloop]
        b = self._tails[nonloop]

        if not self._simple and a.size:
            lo = np.minimum(a, b)
            hi = np.maximum(a, b)
            keys = np.unique(lo * (n + 1) + hi)
            a, b = keys // (n + 1), keys % (n + 1)

        degree = self._degree
        # float weights are exact here: every partial sum is below 2**53
        neighbour_mass = np.bincount(
            a, weights=degree[b], minlength=n + 1
        ) + np.bincount(b, weights=degree[a], minlength=n + 1)
        paired = degree - 2 * self._loops

        result = np.rint(neighbour_mass).astype(np.int64) - paired
        result[0] = 0
        result.setflags(write=False)
        return result

    def collapse(self, m: int) -> "MultiGraph":
        """
        Identify consecutive blocks of m vertices: vertex v maps to ceil(v / m).

        Raises:
            BlockSizeError: if m < 1 or n is not a multiple of m
        """
        if m < 1:
            raise BlockSizeError(f"block size must be >= 1, received {m}")
        if m == 1:
            return self
        if self._n % m:
            raise BlockSizeError(
                f"cannot collapse {self._n} vertices into blocks of {m}"
            )

        heads = (self._heads - 1) // m + 1
        tails = (self._tails - 1) // m + 1
        return MultiGraph(
            self._n // m, heads, tails, block_size=self._block_size * m, simple=False
        )

    def _check_vertex(self, v: int):
        if not 1 <= v <= self._n:
            raise UnknownVertexError(f"vertex {v} is not in 1..{self._n}")

    def __repr__(self) -> str:
        return (
            f"MultiGraph(n={self._n}, edges={self.edge_count}, "
            f"block_size={self._block_size})"
        )
