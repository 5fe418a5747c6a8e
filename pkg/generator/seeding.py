import numpy as np

from .config import GeneratorConfig
from .errors import GeneratorStateError


def check_seed(seed: int) -> int:
    if not isinstance(seed, (int, np.integer)) or isinstance(seed, bool):
        raise GeneratorStateError(f"seed must be an integer, received {seed!r}")
    if not 0 <= seed <= GeneratorConfig.MAX_SEED:
        raise GeneratorStateError(f"seed must fit in 64 unsigned bits, received {seed}")
    return int(seed)


def replicate_seed(seed: int, replicate: int) -> np.random.SeedSequence:
    """
    mix(seed, r): the seed sequence of replicate r.

    numpy hashes the entropy words [seed, r] into the PCG64 state, so every
    replicate gets an independent stream that can be rebuilt from (seed, r) alone.
    """
    check_seed(seed)
    if replicate < 0:
        raise GeneratorStateError(f"replicate index must be >= 0, received {replicate}")
    return np.random.SeedSequence([int(seed), int(replicate)])


def make_rng(seed: int | np.random.SeedSequence) -> np.random.Generator:
    if not isinstance(seed, np.random.SeedSequence):
        seed = check_seed(seed)
    bit_generator = getattr(np.random, GeneratorConfig.BIT_GENERATOR)(seed)
    return np.random.Generator(bit_generator)
