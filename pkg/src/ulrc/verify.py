"""Invariant suite run by ``ulrc verify`` against one constructed code."""

from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass

from .bounds import bound_d_profile, bound_d_req, bound_req_exhaustive
from .construction import (
    LrcCode,
    encode_with_generator,
    erank_by_groups,
    lrc_encode,
    lrc_erank,
    lrc_local_repair,
    lrc_min_distance,
    lrc_worst_pattern,
)
from .errors import CapExceededError, LrcError
from .fields import mat_rank
from .linpoly import frobenius_powers
from .locality import ENUMERATION_CAP
from .oracle import (
    DISTANCE_CAP,
    DLOC_CAP,
    PATTERN_CAP,
    distance_search,
    minimal_witness_violations,
    oracle_aux_ranks,
    oracle_dloc_all,
    oracle_worst_pattern,
    partition_from_witnesses,
    profile_from_witnesses,
)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def _random_message(rng, code):
    return [rng.randrange(code.tower.order) for _ in range(code.k)]


def _quick_checks(code: LrcCode, rng, trials: int):
    T, k = code.tower, code.k
    out = []

    moore = all(
        [code.G[l][c] for l in range(k)] == frobenius_powers(T, y, k) for c, y in enumerate(code.symbol_points)
    )
    out.append(Check("moore_structure", moore, "G[l][i] = y_i^(q^l)"))

    mism = 0
    for _ in range(trials):
        msg = _random_message(rng, code)
        mism += lrc_encode(code, msg) != encode_with_generator(code, msg)
    out.append(Check("pipeline_equals_generator", mism == 0, f"{mism}/{trials} mismatches"))

    mds_bad = []
    for gi, g in enumerate(code.groups):
        width = len(g.members)
        for cols in itertools.combinations(range(width), g.j):
            sub = [[row[c] for c in cols] for row in g.generator]
            if mat_rank(T, sub) < g.j:
                mds_bad.append((gi + 1, [c + 1 for c in cols]))
                break
    out.append(Check("local_codes_mds", not mds_bad, f"non-MDS groups: {mds_bad}" if mds_bad else ""))

    formula_bad = grank_bad = 0
    for _ in range(trials):
        S = [i for i in range(code.n) if rng.random() < 0.5]
        er = lrc_erank(code, S)
        formula_bad += er != erank_by_groups(code, S)
        gr = mat_rank(T, [[row[i] for i in S] for row in code.G]) if S else 0
        grank_bad += gr != min(er, k)
    out.append(Check("erank_group_formula", formula_bad == 0, f"{formula_bad}/{trials} subsets disagree"))
    out.append(Check("grank_equals_min_erank_k", grank_bad == 0, f"{grank_bad}/{trials} subsets disagree"))

    msg = _random_message(rng, code)
    word = lrc_encode(code, msg)
    repair_bad = []
    for i in range(code.n):
        erased = list(word)
        erased[i] = None
        try:
            if lrc_local_repair(code, erased, i).value != word[i]:
                repair_bad.append(i + 1)
        except (LrcError, RuntimeError):
            repair_bad.append(i + 1)
    out.append(Check("local_repair_roundtrip", not repair_bad, f"failed symbols: {repair_bad}" if repair_bad else ""))

    req = code.requirement
    d_greedy = lrc_min_distance(code)
    d_req = bound_d_req(req, k).d
    out.append(Check("greedy_distance_meets_bound", d_greedy == d_req, f"greedy d={d_greedy}, bound={d_req}"))
    if req.length <= ENUMERATION_CAP:
        ex = bound_req_exhaustive(req, k)
        out.append(Check("exhaustive_equals_closed_form", ex.d_ub == d_req, f"{ex.d_ub} vs {d_req}"))
    return out


def _full_checks(code: LrcCode):
    T, k, n, delta = code.tower, code.k, code.n, code.delta
    out = []
    cap = min(DISTANCE_CAP, DLOC_CAP, PATTERN_CAP)
    if n > cap:
        raise CapExceededError(f"n={n} exceeds exhaustive verification cap {cap}")

    cols = list(zip(*code.G))
    search = distance_search(T.top, cols, k)
    d = search.d
    d_greedy = lrc_min_distance(code)
    d_req = bound_d_req(code.requirement, k).d
    out.append(Check("oracle_distance_optimal", d == d_greedy == d_req, f"oracle={d}, greedy={d_greedy}, bound={d_req}"))
    redundancy_ok = d <= n - k + 1 - search.max_gamma
    out.append(Check("redundancy_bound_consistent", redundancy_ok, f"max gamma={search.max_gamma}"))

    worst_bad = [e for e in range(n + 1) if oracle_worst_pattern(code, e) != lrc_worst_pattern(code, e).remaining_erank]
    out.append(Check("greedy_worst_pattern_exact", not worst_bad, f"differs at e={worst_bad}" if worst_bad else ""))

    if not 2 <= delta <= d:
        out.append(Check("profile_equals_requirement", False, f"delta={delta} exceeds distance {d}"))
        return out
    wits = oracle_dloc_all(T, code.G, delta)
    prof = profile_from_witnesses(delta, wits)
    out.append(Check("profile_equals_requirement", prof.n == code.requirement.n, f"profile={list(prof.n)}"))
    own = [w for w in wits if w.r > code.groups[code.group_of[w.i]].j]
    out.append(Check("locality_satisfied", not own, f"symbols over budget: {[w.i + 1 for w in own]}" if own else ""))

    rank_bad = [w.i + 1 for w in wits if mat_rank(T, [[row[s] for s in w.support] for row in code.G]) > w.r]
    out.append(Check("witness_rank_at_most_r", not rank_bad, str(rank_bad) if rank_bad else ""))
    viol = minimal_witness_violations(T, code.G, delta, wits)
    out.append(Check("higher_locality_excluded_from_repair", not viol, str(viol[:5]) if viol else ""))

    aux = oracle_aux_ranks(T, code.G, partition_from_witnesses(wits), delta)
    out.append(Check("xi_within_k_bounds", aux.xi_within_k_bounds, f"xi={list(aux.xi)}, k_j={list(aux.k_bounds)}"))
    d_prof = bound_d_profile(prof, k)
    chain = d <= aux.rank_bound <= d_prof <= d_req
    out.append(
        Check("bound_chain", chain, f"d={d} <= rank_bound={aux.rank_bound} <= profile={d_prof} <= requirement={d_req}")
    )
    return out


def verify_code(code: LrcCode, level: str = "full", seed: int = 0, trials: int = 100) -> list[Check]:
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    rng = random.Random(seed)
    checks = _quick_checks(code, rng, trials)
    if level == "full":
        checks += _full_checks(code)
    return checks


def report(checks) -> dict:
    return {"passed": all(c.passed for c in checks), "checks": [asdict(c) for c in checks]}

