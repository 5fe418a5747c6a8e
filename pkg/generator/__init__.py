from .interface import GeneratorInterface
from .generator import Generator, slot_histories
from .seeding import make_rng, replicate_seed
from .state import GeneratorState

__all__ = [
    "GeneratorInterface",
    "Generator",
    "GeneratorState",
    "make_rng",
    "replicate_seed",
    "slot_histories",
]
