import itertools
from typing import Iterator

import numpy as np

from logger import Logger
from multigraph import AttachmentHistory, MultiGraph
from .errors import GeneratorStateError
from .seeding import make_rng


def _resolve_slots(indices: np.ndarray) -> np.ndarray:
    """
    Turn per-step slot indices into targets.

    Slot 2(s-1) holds vertex s and slot 2(s-1)+1 holds target(s). An even index
    resolves immediately (the last even slot of step t is t itself, the loop
    case); an odd index copies the target of an earlier vertex, so chains are
    followed by pointer jumping until every vertex is resolved.
    """
    n = indices.shape[0]
    targets = np.zeros(n, dtype=np.int64)

    even = indices % 2 == 0
    targets[even] = indices[even] // 2 + 1

    # 0-based position of the vertex whose target is copied
    link = (indices + 1) // 2 - 1
    resolved = even.copy()

    pending = np.flatnonzero(~resolved)
    pointer = link[pending]
    while pending.size:
        ready = resolved[pointer]
        targets[pending[ready]] = targets[pointer[ready]]
        resolved[pending[ready]] = True

        pending = pending[~ready]
        pointer = link[pointer[~ready]]

    return targets


class Generator:

    def __init__(self):
        logger_instance = Logger()
        self.logger = logger_instance.get_logger(name=self.__class__.__name__)

    def generate(self, n: int, seed: int | np.random.SeedSequence) -> AttachmentHistory:
        """
        Sample the attachment history of G_1^n.

        Draws one double per step, exactly as GeneratorState.attach_step does, so
        both paths give the same history for the same seed.

        Args:
            n (int): number of vertices
            seed (int | np.random.SeedSequence): 64-bit seed or a derived seed sequence
        """
        if n < 0:
            raise GeneratorStateError(f"n must be >= 0, received {n}")

        rng = make_rng(seed)
        options = 2 * np.arange(1, n + 1, dtype=np.int64) - 1
        indices = (rng.random(n) * options).astype(np.int64)
        np.minimum(indices, options - 1, out=indices)

        history = AttachmentHistory(_resolve_slots(indices))
        self.logger.debug(f"Generated attachment history with n={n}")
        return history

    def generate_collapsed(
        self, n: int, m: int, seed: int | np.random.SeedSequence
    ) -> MultiGraph:
        """
        Sample G_m^n: generate G_1^{mn} and identify blocks of m consecutive vertices.
        """
        if m < 1:
            raise GeneratorStateError(f"m must be >= 1, received {m}")

        history = self.generate(n * m, seed)
        return MultiGraph.from_history(history).collapse(m)


def slot_histories(n: int) -> Iterator[AttachmentHistory]:
    """
    Every slot sequence of length n, in mixed-radix order (digit t ranges over
    the 2t - 1 slots of step t), mapped to its target history. There are
    (2n - 1)!! of them and each is equally likely.
    """
    for digits in itertools.product(*(range(2 * t - 1) for t in range(1, n + 1))):
        yield AttachmentHistory(_resolve_slots(np.asarray(digits, dtype=np.int64)))
