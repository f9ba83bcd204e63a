import pytest

from hilbstrata.staircase import StandardSet

SQUARE = StandardSet.of([(0, 0), (1, 0), (0, 1), (1, 1)])
# reconstructed from the drawings; only the class counts are checked against the text
L_SHAPE = StandardSet.of([(a, b) for a in range(5) for b in range(2)] + [(a, b) for a in range(2) for b in range(5)])
SLAB = StandardSet.box((2, 5, 2))


@pytest.fixture
def square():
    return SQUARE
