import pytest

from balanced_mds.support import SupportMatrix

# The 5x8 counterexample pattern: row weights all 4 and column weights
# balanced, yet rows {0,1,2} together cover only 5 columns where 6 are
# required, so it cannot carry an MDS generator.
P_COUNTEREXAMPLE_ROWS = [
    [1, 0, 0, 0, 1, 1, 1, 0],
    [1, 0, 0, 0, 1, 0, 1, 1],
    [1, 0, 0, 0, 0, 1, 1, 1],
    [0, 1, 1, 1, 1, 0, 0, 0],
    [0, 1, 1, 1, 0, 1, 0, 0],
]


@pytest.fixture
def p_counterexample() -> SupportMatrix:
    return SupportMatrix.from_rows(P_COUNTEREXAMPLE_ROWS)
