import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from amdesigns.codes import (  # noqa: E402
    LinearCode,
    construct_dual_golay,
    construct_extended_golay,
    construct_golay,
)


@pytest.fixture(scope="session")
def golay11() -> LinearCode:
    return construct_golay()


@pytest.fixture(scope="session")
def golay11dual() -> LinearCode:
    return construct_dual_golay()


@pytest.fixture(scope="session")
def golay12() -> LinearCode:
    return construct_extended_golay()


@pytest.fixture
def repetition4() -> LinearCode:
    return LinearCode.from_rows([[1, 1, 1, 1]], 3, name="rep4")
