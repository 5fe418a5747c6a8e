from typing import Iterator

import numpy as np

from multigraph import AttachmentHistory, MultiGraph
from .generator import Generator, slot_histories
from .seeding import replicate_seed
from .state import GeneratorState


class GeneratorInterface:

    def __init__(self):
        self.generator = Generator()

    def new_state(self, seed: int | np.random.SeedSequence) -> GeneratorState:
        return GeneratorState(seed)

    def attach_step(self, state: GeneratorState) -> int:
        return state.attach_step()

    def generate(self, n: int, seed: int | np.random.SeedSequence) -> AttachmentHistory:
        return self.generator.generate(n, seed)

    def generate_collapsed(
        self, n: int, m: int, seed: int | np.random.SeedSequence
    ) -> MultiGraph:
        return self.generator.generate_collapsed(n, m, seed)

    def replicate_seed(self, seed: int, replicate: int) -> np.random.SeedSequence:
        return replicate_seed(seed, replicate)

    def slot_histories(self, n: int) -> Iterator[AttachmentHistory]:
        return slot_histories(n)
