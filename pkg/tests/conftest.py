import os

import pytest


def pytest_collection_modifyitems(config, items):
    if os.environ.get("PA_SECDEG_SLOW_TESTS") == "1":
        return
    skip_slow = pytest.mark.skip(reason="set PA_SECDEG_SLOW_TESTS=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
