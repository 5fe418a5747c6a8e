import numpy as np

from .seeding import make_rng


class GeneratorState:
    """
    Step-by-step preferential attachment.

    slots holds both endpoints of every edge added so far, in creation order:
    for vertex s the pair (s, target(s)) sits at positions 2(s-1), 2(s-1)+1.
    Vertex v therefore occupies exactly d(v) slots.
    """

    def __init__(self, seed: int | np.random.SeedSequence):
        self.rng = make_rng(seed)
        self.t = 0
        self.slots: list[int] = []
        self.targets: list[int] = []

    def attach_step(self) -> int:
        """
        Add vertex t + 1 and return the vertex it attached to.

        A uniform index over the 2t + 1 options: the 2t existing slots, each
        naming its vertex, plus one extra slot for the new vertex itself (a loop).
        """
        t = self.t + 1
        options = 2 * t - 1
        index = min(int(self.rng.random() * options), options - 1)

        target = t if index == options - 1 else self.slots[index]

        self.slots.append(t)
        self.slots.append(target)
        self.targets.append(target)
        self.t = t
        return target

    def degree_counts(self) -> np.ndarray:
        return np.bincount(np.asarray(self.slots, dtype=np.int64), minlength=self.t + 1)
