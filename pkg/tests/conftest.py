"""Shared fixtures: the six-dimensional reference manifold used throughout.

SIXDIM_BOTT is a Bott matrix whose columns pair up as (1,2), (3,4),
(5,6); SIXDIM_P is its P-matrix.  The manifold is orientable and Kahler
but carries no Spin structure, which exercises every decider at once.
"""

import pytest

from realbott import BottMatrix, PMatrix, parse_bott, parse_pmatrix

SIXDIM_BOTT_TEXT = """\
0 0 1 1 1 1
0 0 1 1 1 1
0 0 0 0 1 1
0 0 0 0 1 1
0 0 0 0 0 0
0 0 0 0 0 0
"""

SIXDIM_P_TEXT = """\
1 0 2 2 2 2
0 1 2 2 2 2
0 0 1 0 2 2
0 0 0 1 2 2
0 0 0 0 1 0
0 0 0 0 0 1
"""

KLEIN_TEXT = "0 1 / 0 0"


@pytest.fixture
def sixdim_bott() -> BottMatrix:
    return parse_bott(SIXDIM_BOTT_TEXT)


@pytest.fixture
def sixdim_p() -> PMatrix:
    return parse_pmatrix(SIXDIM_P_TEXT)


@pytest.fixture
def klein_bottle() -> BottMatrix:
    return parse_bott(KLEIN_TEXT)


def zero_bott(n: int) -> BottMatrix:
    return BottMatrix(tuple((0,) * n for _ in range(n)))
