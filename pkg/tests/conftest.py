import os

import pytest
from hypothesis import settings

settings.register_profile("ci", max_examples=200, deadline=None)
settings.load_profile("ci")


def full_mode() -> bool:
    return os.environ.get("PARITY_DESCENTS_FULL") == "1"


full = pytest.mark.skipif(not full_mode(), reason="set PARITY_DESCENTS_FULL=1 for S_10/S_11 runs")
