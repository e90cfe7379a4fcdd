import itertools

import pytest

from ulrc.construction import LrcParams, lrc_construct
from ulrc.fields import FieldTower, build_tower


def make_code(delta, m, k, p=5, t=None):
    n_gab = sum(v * j for j, v in enumerate(m, 1))
    tower = build_tower(p, 1, t or n_gab)
    return lrc_construct(LrcParams(tower, delta, tuple(m), k))


def grid():
    """(delta, m, k) over the optimality grid, p=5 and t = n_Gab."""
    out = []
    for delta, m in itertools.product((2, 3), ((1, 1), (1, 1, 1), (2, 1), (1, 2))):
        n_gab = sum(v * j for j, v in enumerate(m, 1))
        out.extend((delta, m, k) for k in range(len(m), n_gab + 1))
    return out


GRID = grid()


def grid_id(case):
    delta, m, k = case
    return f"d{delta}-m{''.join(map(str, m))}-k{k}"


@pytest.fixture(scope="session")
def example_a():
    return make_code(2, (1, 1, 1), 4, t=6)


@pytest.fixture(scope="session")
def example_b():
    return make_code(2, (1, 1), 3, t=3)


@pytest.fixture(scope="session")
def f16():
    return build_tower(2, 1, 4)


TOWERS = [(2, 1, 4), (5, 1, 6), (2, 2, 3), (3, 2, 2), (7, 2, 3)]


@pytest.fixture(scope="session", params=TOWERS, ids=lambda k: "p{}a{}t{}".format(*k))
def tower(request):
    return build_tower(*request.param)
