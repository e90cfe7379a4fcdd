import itertools
import random

import pytest

from ulrc.construction import (
    LrcParams,
    encode_with_generator,
    erank_by_groups,
    from_descriptor,
    group_summary,
    lrc_construct,
    lrc_encode,
    lrc_erank,
    lrc_global_decode,
    lrc_local_repair,
    lrc_min_distance,
    lrc_worst_pattern,
    make_pattern,
    to_descriptor,
)
from ulrc.errors import ConstraintError, DataLossError, RepairInfeasibleError
from ulrc.fields import build_tower, mat_rank
from ulrc.linpoly import LinearizedPoly, lp_eval
from ulrc.oracle import oracle_worst_pattern

from conftest import GRID, grid_id, make_code


def test_example_a_layout(example_a):
    assert example_a.n == 9 and example_a.params.n_gab == 6
    assert group_summary(example_a) == [(1, 2), (2, 3), (3, 4)]


def test_smallest_instance():
    code = make_code(2, (1,), 1, t=1)
    assert code.n == 2
    assert lrc_min_distance(code) == 2


def test_k_range_rejected():
    T = build_tower(5, 1, 6)
    with pytest.raises(ConstraintError, match="k range"):
        LrcParams(T, 2, (1, 1, 1), 7)


def test_small_field_rejected():
    T = build_tower(2, 1, 3)
    with pytest.raises(ConstraintError, match="q too small"):
        LrcParams(T, 2, (1, 1), 2)


def test_zero_message(example_a):
    assert lrc_encode(example_a, [0] * 4) == [0] * 9


def test_symbols_are_polynomial_evaluations(example_a):
    rng = random.Random(1)
    T = example_a.tower
    for _ in range(20):
        msg = [rng.randrange(T.order) for _ in range(4)]
        f = LinearizedPoly(T, msg)
        word = lrc_encode(example_a, msg)
        assert word == [lp_eval(f, y) for y in example_a.symbol_points]
        assert word == encode_with_generator(example_a, msg)


def test_erank_examples(example_a):
    assert lrc_erank(example_a, []) == 0
    for g in example_a.groups:
        assert lrc_erank(example_a, g.members) == g.j
    T = list(example_a.groups[0].members) + list(example_a.groups[1].members) + [example_a.groups[2].members[0]]
    assert lrc_erank(example_a, T) == 4


def test_repair_every_symbol_with_delta_minus_one_losses():
    code = make_code(3, (1, 1), 2, t=3)
    rng = random.Random(2)
    T = code.tower
    msg = [rng.randrange(T.order) for _ in range(code.k)]
    word = lrc_encode(code, msg)
    for g in code.groups:
        for lost in itertools.combinations(g.members, code.delta - 1):
            damaged = [None if i in lost else v for i, v in enumerate(word)]
            for i in lost:
                res = lrc_local_repair(code, damaged, i)
                assert res.value == word[i] and res.reads == g.j
        lost = g.members[: code.delta]
        damaged = [None if i in lost else v for i, v in enumerate(word)]
        with pytest.raises(RepairInfeasibleError):
            lrc_local_repair(code, damaged, lost[0])


def test_example_a_any_three_erasures(example_a):
    rng = random.Random(3)
    T = example_a.tower
    msg = [rng.randrange(T.order) for _ in range(4)]
    word = lrc_encode(example_a, msg)
    for lost in itertools.combinations(range(9), 3):
        assert lrc_global_decode(example_a, [None if i in lost else v for i, v in enumerate(word)]) == msg


def test_example_a_worst_five_is_data_loss(example_a):
    pat = lrc_worst_pattern(example_a, 5)
    assert pat.remaining_erank == 3 and not pat.decodable
    word = lrc_encode(example_a, [1, 2, 3, 4])
    with pytest.raises(DataLossError):
        lrc_global_decode(example_a, [None if i in pat.erased else v for i, v in enumerate(word)])


def test_example_b_pattern(example_b):
    pat = lrc_worst_pattern(example_b, 2)
    assert pat.erased_1based == [4, 5]
    assert pat.remaining_erank == 2 and not pat.decodable
    assert lrc_worst_pattern(example_b, 0).remaining_erank == 3
    assert lrc_worst_pattern(example_b, 5).remaining_erank == 0


def test_min_distance_examples(example_a, example_b):
    assert lrc_min_distance(example_a) == 4
    assert lrc_min_distance(example_b) == 2


@pytest.mark.parametrize("case", GRID, ids=grid_id)
def test_greedy_pattern_matches_exhaustive(case):
    code = make_code(*case)
    for e in range(code.n + 1):
        assert lrc_worst_pattern(code, e).remaining_erank == oracle_worst_pattern(code, e)


@pytest.mark.parametrize("case", GRID, ids=grid_id)
def test_generator_rank_equals_min_erank_k(case):
    code = make_code(*case)
    rng = random.Random(grid_id(case))
    for _ in range(500):
        S = [i for i in range(code.n) if rng.random() < 0.5]
        er = lrc_erank(code, S)
        assert er == erank_by_groups(code, S)
        gr = mat_rank(code.tower, [[row[i] for i in S] for row in code.G]) if S else 0
        assert gr == min(er, code.k)


def test_make_pattern(example_a):
    pat = make_pattern(example_a, [0, 1])
    assert pat.remaining_erank == 5 and pat.decodable


def test_descriptor_roundtrip(example_a):
    desc = to_descriptor(example_a)
    again = from_descriptor(desc)
    assert again.G == example_a.G and again.symbol_points == example_a.symbol_points
    assert to_descriptor(again) == desc
