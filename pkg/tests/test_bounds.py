import math
import random
from fractions import Fraction

import pytest

from ulrc.bounds import (
    bound_classic,
    bound_d_profile,
    bound_d_req,
    bound_k_profile,
    bound_k_req,
    bound_single_parity,
    bound_req_exhaustive,
    bound_two_locality,
    build_report,
    profile_r,
    two_locality_of,
)
from ulrc.errors import ConstraintError
from ulrc.fields import build_tower
from ulrc.locality import LocalityProfile, LocalityRequirement
from ulrc.oracle import oracle_min_distance, oracle_profile

REQ = LocalityRequirement
PRF = LocalityProfile


def random_requirements(count, seed=0, r_max=3, n_max=12):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        r = rng.randint(1, r_max)
        n = [rng.randint(0, 6) for _ in range(r)]
        if n[-1] == 0 or sum(n) > n_max:
            continue
        out.append(REQ(rng.choice((2, 3, 4)), n))
    return out


def test_classic_examples():
    assert bound_classic(9, 4, 3, 2) == 5
    assert bound_classic(14, 8, 4, 3) == 5
    for n, k in [(6, 2), (7, 7)]:
        assert bound_classic(n, k, k + 1, 3) == n - k + 1


def test_profile_example():
    prof = PRF(2, (2, 3))
    assert bound_k_profile(prof) == 3
    assert profile_r(prof, 3) == 2
    assert bound_d_profile(prof, 3) == 2


def test_profile_dimension_examples():
    assert bound_k_profile(PRF(2, (2, 3, 4))) == 6
    assert bound_k_profile(PRF(3, (1, 1, 2))) == 0
    assert bound_k_profile(PRF(2, (4,))) == 2


def test_exhaustive_examples():
    ex = bound_req_exhaustive(REQ(2, (0, 1, 1)), 1)
    assert ex.d_ub == 2 and ex.d_witness.n == (2, 0, 0)
    with pytest.raises(ConstraintError):
        bound_req_exhaustive(REQ(2, (0, 1, 1)), 2)


def test_k_req_examples():
    assert bound_k_req(REQ(2, (2, 3, 4))) == (Fraction(6), 6)
    assert bound_k_req(REQ(2, (0, 1, 1))) == (Fraction(17, 12), 1)
    assert bound_k_req(REQ(2, (0, 0, 8))) == (Fraction(6), 6)


def test_d_req_examples():
    b = bound_d_req(REQ(2, (2, 3, 4)), 4)
    assert (b.d, b.r) == (4, 3)
    b = bound_d_req(REQ(2, (0, 1, 1)), 1)
    assert (b.d, b.r) == (2, 3)


def test_equal_locality_reduces_to_classic():
    for n, k in [(8, 3), (12, 5)]:
        assert bound_d_req(REQ(3, (0, 0, n)), k).d == bound_classic(n, k, 3, 3)


def test_two_locality_example():
    tl = bound_two_locality(2, 4, 3, 4, 2, 5)
    assert tl == (3, 2, True)


def test_two_locality_condition_failure_reports_none():
    # width 4, q = 1 < delta-1 = 2
    tl = bound_two_locality(2, 5, 3, 5, 3, 4)
    assert not tl.condition_held and tl.tightened is None


def test_single_parity_example_and_reduction():
    assert bound_single_parity(PRF(2, (4, 0)), 2) == 2 == bound_d_profile(PRF(2, (4, 0)), 2)
    assert bound_single_parity(PRF(2, (0, 0, 8)), 5) == bound_classic(8, 5, 3, 2)


def test_single_parity_identity_random_profiles():
    rng = random.Random(7)
    checked = 0
    while checked < 300:
        n = [rng.randint(0, 7) for _ in range(rng.randint(1, 4))]
        if not any(n):
            continue
        prof = PRF(2, n)
        for k in range(1, bound_k_profile(prof) + 1):
            assert bound_single_parity(prof, k) == bound_d_profile(prof, k)
        checked += 1


def test_requirement_bound_orderings_and_sandwich():
    for req in random_requirements(250):
        ex = bound_req_exhaustive(req)
        exact, floor_ = bound_k_req(req)
        assert ex.k_ub <= floor_
        divisible = all(v % (j + req.delta - 1) == 0 for j, v in enumerate(req.n, 1))
        pair = two_locality_of(req)
        for k in range(1, ex.k_ub + 1):
            d_prf = bound_req_exhaustive(req, k).d_ub
            b = bound_d_req(req, k)
            assert d_prf <= b.d
            if divisible:
                assert d_prf == b.d
            if pair:
                tl = bound_two_locality(*pair, req.delta, k)
                if tl.condition_held:
                    assert tl.tightened <= tl.basic
                d1 = bound_classic(req.length, k, pair[0], req.delta)
                d2 = bound_classic(req.length, k, pair[2], req.delta)
                assert d1 <= b.d <= d2


def _head_dimension(req):
    return sum(math.floor(dp.m) * dp.j for dp in req.params[: req.r_star - 1])


def test_loose_variant_dominates_when_numerator_nonnegative():
    seen = 0
    for req in random_requirements(250, seed=3):
        for k in range(max(1, _head_dimension(req)), bound_req_exhaustive(req).k_ub + 1):
            b = bound_d_req(req, k)
            assert b.d <= b.d_loose
            seen += 1
    assert seen > 100


def test_loose_variant_breaks_below_head_dimension():
    """Repetition code [10,1,10] meets (5,3,2) at delta=2 but exceeds the loose value."""
    req = REQ(2, (5, 3, 2))
    b = bound_d_req(req, 1)
    assert (b.d, b.d_loose) == (10, 9)
    T = build_tower(5, 1, 1)
    G = [[1] * 10]
    assert oracle_min_distance(T, G) == 10
    assert oracle_profile(T, G, 2).n == (10,)


def test_monotone_in_k():
    for req in random_requirements(100, seed=5):
        kmax = bound_req_exhaustive(req).k_ub
        prev = None
        for k in range(1, kmax + 1):
            cur = (bound_d_req(req, k).d, bound_req_exhaustive(req, k).d_ub, bound_classic(req.length, k, req.r_star, req.delta))
            if prev:
                assert all(c <= p for c, p in zip(cur, prev))
            prev = cur


def test_report_example():
    rep = build_report(REQ(2, (2, 3, 4)), 4)
    assert rep.d_UB_req == 4 and rep.d_classic == 5
    assert rep.k_UB_req == "6" and rep.d_UB_req_prf == 4
    assert not rep.infeasible


def test_report_flags_infeasible_k():
    rep = build_report(REQ(2, (0, 1, 1)), 2)
    assert "d_UB_req" in rep.infeasible and "d_UB_req_prf" in rep.infeasible
