import math
from fractions import Fraction as F

import numpy as np
import pytest

from qpd3 import GameConfig, StrategyParams


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


def random_params(rng) -> StrategyParams:
    return StrategyParams(
        theta=rng.uniform(0.0, math.pi),
        alpha=rng.uniform(-math.pi, math.pi),
        beta=rng.uniform(-math.pi, math.pi),
    )


def random_config(rng) -> GameConfig:
    return GameConfig(rng.uniform(0.0, math.pi / 2), rng.uniform(0.0, math.pi / 2))


# Printed reference protocol tables, re-keyed here independently of the
# package's copy, in their original column layout: Charlie's move is the
# outer header and Bob's the inner, so columns run (C=0,B=0), (C=0,B=pi),
# (C=pi,B=0), (C=pi,B=pi).  The package labels columns (theta_B, theta_C),
# which swaps the middle two; PRINTED_TO_PACKAGE_COL is that mapping.
PRINTED_TABLE2 = [
    [(3, 3, 3), (2, 5, 2), (2, 2, 5), (0, 4, 4)],
    [
        (F(3, 4), F(7, 4), F(7, 4)),
        (F(7, 2), F(1, 2), F(17, 4)),
        (F(7, 2), F(17, 4), F(1, 2)),
        (F(9, 2), F(9, 4), F(9, 4)),
    ],
    [
        (F(1, 2), F(5, 2), F(5, 2)),
        (3, 1, F(9, 2)),
        (3, F(9, 2), 1),
        (4, F(5, 2), F(5, 2)),
    ],
    [(5, 2, 2), (4, 4, 0), (4, 0, 4), (1, 1, 1)],
]

PRINTED_TABLE3 = [
    [(2, 2, 2), (3, F(5, 2), 3), (3, 3, F(5, 2)), (F(5, 2), 3, 3)],
    [
        (F(17, 8), F(9, 4), F(9, 4)),
        (3, F(21, 8), F(23, 8)),
        (3, F(23, 8), F(21, 8)),
        (F(19, 8), F(11, 4), F(11, 4)),
    ],
    [
        (F(9, 4), F(5, 2), F(5, 2)),
        (3, F(11, 4), F(11, 4)),
        (3, F(11, 4), F(11, 4)),
        (F(9, 4), F(5, 2), F(5, 2)),
    ],
    [(F(5, 2), 3, 3), (3, 3, F(5, 2)), (3, F(5, 2), 3), (2, 2, 2)],
]

PRINTED_TO_PACKAGE_COL = {0: 0, 1: 2, 2: 1, 3: 3}
