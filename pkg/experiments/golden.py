import json
from functools import lru_cache

from .config import ExperimentsConfig
from .errors import ExperimentConfigError


@lru_cache
def load_golden(name: str) -> dict:
    """
    Frozen tolerance constants of one report, read from GOLDEN_DIR/<name>.json.
    """
    path = ExperimentsConfig.GOLDEN_DIR / f"{name}.json"
    if not path.exists():
        raise ExperimentConfigError(f"golden file {path} does not exist")
    with open(path) as file:
        return json.load(file)


def golden_ref(name: str) -> str:
    return f"golden/{name}.json"
