import os
import sys

# tests write no log files and import ``app`` from the project directory
os.environ.setdefault("BILLIARDS_LOG_TO_FILE", "0")
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import pytest  # noqa: E402

from app.schemas.grid import GridSpec  # noqa: E402

SMALL_PLANAR = [(1, 1), (1, 2), (2, 3), (3, 3), (4, 3), (6, 4), (5, 2)]
SMALL_SPATIAL = [(1, 1, 1), (2, 2, 2), (3, 2, 2), (4, 3, 2)]


@pytest.fixture
def grid_6x4() -> GridSpec:
    return GridSpec.of(6, 4)


@pytest.fixture
def grid_4x3() -> GridSpec:
    return GridSpec.of(4, 3)
