"""Dimension and minimum-distance upper bounds for codes with unequal (r, delta)-locality.

Everything is exact integer/rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import ConstraintError
from .locality import (
    ENUMERATION_CAP,
    LocalityProfile,
    LocalityRequirement,
    derive_params,
    enumerate_profiles,
)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def bound_classic(n: int, k: int, r: int, delta: int) -> int:
    """Singleton-like bound for codes whose every symbol has locality <= r."""
    if not 1 <= k <= n or r < 1 or delta < 2:
        raise ConstraintError(f"invalid (n={n}, k={k}, r={r}, delta={delta})")
    return n - k + 1 - (_ceil_div(k, r) - 1) * (delta - 1)


def bound_k_profile(prof: LocalityProfile) -> int:
    return sum(dp.k for dp in prof.params)


def profile_r(prof: LocalityProfile, k: int) -> Optional[int]:
    """Smallest j whose cumulative k_j reaches k, or None if none does."""
    acc = 0
    for j, dp in enumerate(prof.params, 1):
        acc += dp.k
        if acc >= k:
            return j
    return None


def bound_d_profile(prof: LocalityProfile, k: int) -> int:
    if k < 1:
        raise ConstraintError(f"k must be >= 1, got {k}")
    r = profile_r(prof, k)
    if r is None:
        raise ConstraintError(f"k={k} exceeds the profile dimension bound {bound_k_profile(prof)}")
    params = prof.params
    head = params[: r - 1]
    k_head = sum(dp.k for dp in head)
    redundancy = sum(dp.n_j - dp.k for dp in head)
    return prof.length - k + 1 - redundancy - (_ceil_div(k - k_head, r) - 1) * (prof.delta - 1)


def bound_single_parity(prof: LocalityProfile, k: int) -> int:
    """The delta = 2 profile bound in its original ceil(n_j/(j+1)) form.

    Kept as a separate code path so it can cross-check ``bound_d_profile``.
    """
    if prof.delta != 2:
        raise ConstraintError("this bound is only defined for delta = 2")
    ns = prof.n
    info = [nj - _ceil_div(nj, j + 1) for j, nj in enumerate(ns, 1)]
    r, acc = None, 0
    for j in range(1, len(ns) + 1):
        acc += info[j - 1]
        if acc >= k:
            r = j
            break
    if r is None:
        raise ConstraintError(f"k={k} exceeds the profile dimension bound")
    parity = sum(_ceil_div(ns[j - 1], j + 1) for j in range(1, r))
    used = sum(info[j - 1] for j in range(1, r))
    return sum(ns) - k + 2 - parity - _ceil_div(k - used, r)


class ExhaustiveBound(NamedTuple):
    k_ub: int
    k_witness: LocalityProfile
    d_ub: Optional[int]
    d_witness: Optional[LocalityProfile]


def bound_req_exhaustive(req: LocalityRequirement, k: Optional[int] = None, cap: int = ENUMERATION_CAP) -> ExhaustiveBound:
    """Maximise the profile bounds over every profile compatible with ``req``.

    Profiles whose dimension bound is below k are skipped; the witness is the
    first maximiser in enumeration order.
    """
    k_best, k_wit = -1, None
    d_best, d_wit = None, None
    for prof in enumerate_profiles(req, cap):
        kp = bound_k_profile(prof)
        if kp > k_best:
            k_best, k_wit = kp, prof
        if k is not None and 1 <= k <= kp:
            d = bound_d_profile(prof, k)
            if d_best is None or d > d_best:
                d_best, d_wit = d, prof
    if k is not None and d_best is None:
        raise ConstraintError(f"no profile satisfying {req.n} admits dimension k={k}")
    return ExhaustiveBound(k_best, k_wit, d_best, d_wit)


def bound_k_req(req: LocalityRequirement) -> tuple[Fraction, int]:
    exact = sum((dp.m * dp.j for dp in req.params), Fraction(0))
    return exact, math.floor(exact)


class ReqDistanceBound(NamedTuple):
    d: int
    r: int
    d_loose: int


def requirement_r(req: LocalityRequirement, k: int) -> int:
    """1 + the largest j < r* whose cumulative floor(m_j) * j stays below k."""
    best, acc = 0, 0
    for j, dp in enumerate(req.params[: req.r_star - 1], 1):
        acc += math.floor(dp.m) * j
        if acc < k:
            best = j
    return best + 1


def _req_value(req: LocalityRequirement, k: int, r: int) -> int:
    head = req.params[: r - 1]
    floors = [math.floor(dp.m) for dp in head]
    k_head = sum(f * dp.j for f, dp in zip(floors, head))
    dm1 = req.delta - 1
    return req.length - k + 1 - sum(floors) * dm1 - (_ceil_div(k - k_head, r) - 1) * dm1


def bound_d_req(req: LocalityRequirement, k: int) -> ReqDistanceBound:
    _, k_max = bound_k_req(req)
    if not 1 <= k <= k_max:
        raise ConstraintError(f"k={k} outside the feasible range [1, {k_max}]")
    r = requirement_r(req, k)
    return ReqDistanceBound(_req_value(req, k, r), r, _req_value(req, k, req.r_star))


class TwoLocalityBound(NamedTuple):
    basic: int
    tightened: Optional[int]
    condition_held: bool


def bound_two_locality(j1: int, n1: int, j2: int, n2: int, delta: int, k: int) -> TwoLocalityBound:
    """Requirement-based bound for two locality classes and its tightened form.

    The tightened value is only defined when n1 mod (j1 + delta - 1) is 0 or
    at least delta - 1.
    """
    if not 1 <= j1 < j2 or n1 < 0 or n2 <= 0 or delta < 2:
        raise ConstraintError(f"invalid two-locality input ({j1}, {n1}, {j2}, {n2}, {delta})")
    n = n1 + n2
    if not 1 <= k <= n:
        raise ConstraintError(f"k={k} outside [1, {n}]")
    dp = derive_params(n1, j1, delta)
    lo, hi = math.floor(dp.m), math.ceil(dp.m)
    dm1 = delta - 1

    def value(mult):
        if mult * j1 >= k:
            return n - k + 1 - (_ceil_div(k, j1) - 1) * dm1
        return n - k + 1 - mult * dm1 - (_ceil_div(k - mult * j1, j2) - 1) * dm1

    held = dp.q == 0 or dp.q >= delta - 1
    return TwoLocalityBound(value(lo), value(hi) if held else None, held)


def two_locality_of(vec) -> Optional[tuple[int, int, int, int]]:
    """(j1, n1, j2, n2) if exactly two classes are populated, else None."""
    nz = [(j, v) for j, v in enumerate(vec.n, 1) if v]
    if len(nz) != 2:
        return None
    (j1, n1), (j2, n2) = nz
    return j1, n1, j2, n2


@dataclass
class BoundReport:
    kind: str
    delta: int
    n_vec: list
    n: int
    k: Optional[int]
    d_classic: Optional[int] = None
    d_classic_rmin: Optional[int] = None
    d_single_parity: Optional[int] = None
    k_UB_prf: Optional[int] = None
    d_UB_prf: Optional[int] = None
    r_prf: Optional[int] = None
    k_UB_req_prf: Optional[int] = None
    d_UB_req_prf: Optional[int] = None
    argmax_profile: Optional[list] = None
    k_UB_req: Optional[str] = None
    k_UB_req_floor: Optional[int] = None
    d_UB_req: Optional[int] = None
    r_req: Optional[int] = None
    d_UB_req_loose: Optional[int] = None
    two_locality: Optional[dict] = None
    infeasible: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def _flag(report, name, value):
    if value is not None and value <= 0:
        report.infeasible[name] = "non-positive bound: no code exists"
    return value


def build_report(vec, k: Optional[int] = None, as_profile: bool = False, cap: int = ENUMERATION_CAP) -> BoundReport:
    """Every applicable bound for one requirement (or profile) and dimension."""
    n = vec.length
    rep = BoundReport("profile" if as_profile else "requirement", vec.delta, list(vec.n), n, k)
    populated = [j for j, v in enumerate(vec.n, 1) if v]
    if k is not None and 1 <= k <= n:
        rep.d_classic = _flag(rep, "d_classic", bound_classic(n, k, vec.r_star, vec.delta))
        rep.d_classic_rmin = _flag(rep, "d_classic_rmin", bound_classic(n, k, populated[0], vec.delta))

    prof = LocalityProfile(vec.delta, vec.n)
    rep.k_UB_prf = bound_k_profile(prof)
    if k is not None:
        if 1 <= k <= rep.k_UB_prf:
            rep.d_UB_prf = _flag(rep, "d_UB_prf", bound_d_profile(prof, k))
            rep.r_prf = profile_r(prof, k)
            if vec.delta == 2:
                rep.d_single_parity = bound_single_parity(prof, k)
        elif as_profile:
            rep.infeasible["d_UB_prf"] = f"k exceeds k_UB_prf={rep.k_UB_prf}"

    if as_profile:
        return rep

    req = LocalityRequirement(vec.delta, vec.n)
    exact, floor_ = bound_k_req(req)
    rep.k_UB_req, rep.k_UB_req_floor = str(exact), floor_
    ex = bound_req_exhaustive(req, None, cap)
    rep.k_UB_req_prf = ex.k_ub
    if k is None:
        return rep
    if 1 <= k <= floor_:
        b = bound_d_req(req, k)
        rep.d_UB_req = _flag(rep, "d_UB_req", b.d)
        rep.r_req = b.r
        rep.d_UB_req_loose = _flag(rep, "d_UB_req_loose", b.d_loose)
    else:
        rep.infeasible["d_UB_req"] = f"k exceeds floor(k_UB_req)={floor_}"
    if 1 <= k <= ex.k_ub:
        ex = bound_req_exhaustive(req, k, cap)
        rep.d_UB_req_prf = _flag(rep, "d_UB_req_prf", ex.d_ub)
        rep.argmax_profile = list(ex.d_witness.n)
    else:
        rep.infeasible["d_UB_req_prf"] = f"k exceeds k_UB_req_prf={ex.k_ub}"
    pair = two_locality_of(req)
    if pair is not None and 1 <= k <= n:
        tl = bound_two_locality(*pair[:2], *pair[2:], vec.delta, k)
        rep.two_locality = {"j1": pair[0], "n1": pair[1], "j2": pair[2], "n2": pair[3], **tl._asdict()}
    return rep
