import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ulrc.errors import CapExceededError, ConstraintError, ParseError
from ulrc.locality import (
    LocalityProfile,
    LocalityRequirement,
    derive_params,
    enumerate_profiles,
    profile_satisfies_requirement,
)


def test_derived_params_upper_case():
    dp = derive_params(5, 2, 2)
    assert (dp.p, dp.q, dp.m, dp.k) == (1, 2, Fraction(5, 3), 3)


def test_derived_params_lower_case():
    dp = derive_params(5, 2, 3)
    assert (dp.p, dp.q, dp.k) == (1, 1, 2)


def test_boundary_q_equals_delta_minus_2():
    # width 5, q = 2 = delta-2 -> floor branch; q = 3 = delta-1 -> ceil branch
    assert derive_params(7, 2, 4).k == 2
    assert derive_params(8, 2, 4).k == 8 - 2 * 3


EXAMPLE_REQ = LocalityRequirement(2, (0, 1, 1))


def test_example_satisfying_profiles():
    got = [p.n for p in enumerate_profiles(EXAMPLE_REQ)]
    assert got == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1)]


def test_example_rejects_last_composition():
    assert not profile_satisfies_requirement(LocalityProfile(2, (0, 0, 2)), EXAMPLE_REQ)
    assert profile_satisfies_requirement(LocalityProfile(2, (1, 0, 1)), EXAMPLE_REQ)


def test_single_locality_is_forced():
    assert [p.n for p in enumerate_profiles(LocalityRequirement(2, (3,)))] == [(3,)]


def _compositions(n, parts):
    for cut in itertools.product(range(n + 1), repeat=parts - 1):
        if sum(cut) <= n:
            yield tuple(cut) + (n - sum(cut),)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 4), st.lists(st.integers(0, 4), min_size=1, max_size=4).filter(lambda v: v[-1] > 0))
def test_enumeration_equals_composition_filter(delta, n):
    req = LocalityRequirement(delta, n)
    expect = []
    for comp in _compositions(req.length, len(n)):
        pre_c = list(itertools.accumulate(comp))
        pre_n = list(itertools.accumulate(n))
        if all(a >= b for a, b in zip(pre_c, pre_n)):
            expect.append(comp)
    got = [p.n for p in enumerate_profiles(req)]
    assert sorted(got) == sorted(expect)
    assert got == sorted(got, reverse=True)
    assert tuple(n) in got
    assert all(profile_satisfies_requirement(LocalityProfile(delta, g), req) for g in got)


def test_enumeration_cap():
    with pytest.raises(CapExceededError):
        list(enumerate_profiles(LocalityRequirement(2, (10, 11))))


def test_requirement_validation():
    with pytest.raises(ConstraintError):
        LocalityRequirement(2, (1, 0))
    with pytest.raises(ConstraintError):
        LocalityRequirement(1, (2,))
    with pytest.raises(ParseError):
        LocalityRequirement.from_json({"n": [1]})
    assert LocalityRequirement.from_json('{"delta":2,"n":[2,3,4]}').length == 9
