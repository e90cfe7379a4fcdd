"""Exhaustive ground truth for small codes.

Minimum distance comes from the rank characterisation
d = n - max{|T| : rank(G|_T) <= k-1}; locality, profiles and worst-case
erasures are found by plain subset enumeration in lexicographic order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .construction import LrcCode, lrc_erank
from .errors import CapExceededError, ConstraintError, RankDeficiencyError
from .fields import FieldTower, RowReducer, mat_rank, rank_over_base
from .gabidulin import GabidulinCode, gab_encode
from .locality import LocalityProfile, derive_params

DISTANCE_CAP = 20
DLOC_CAP = 14
PATTERN_CAP = 12
RANK_DISTANCE_GUARD = 2**20


class DistanceSearch(NamedTuple):
    d: int
    max_deficient: int  # largest |T| with rank(T) <= k-1
    witness: tuple[int, ...]
    max_gamma: int  # largest |T| - rank(T) over such T


def _columns(G, support=None):
    cols = list(zip(*G))
    if support is None:
        return cols
    return [cols[i] for i in support]


def distance_search(F, cols, k: int) -> DistanceSearch:
    """Enumerate every column subset of rank <= k-1 (pruning at rank k)."""
    n = len(cols)
    best = [-1, (), 0]

    def rec(i, red, chosen):
        if i == n:
            size = len(chosen)
            if size > best[0]:
                best[0], best[1] = size, tuple(chosen)
            best[2] = max(best[2], size - red.rank)
            return
        nxt = red.copy()
        if not nxt.add(cols[i]):
            rec(i + 1, red, chosen + [i])
        elif nxt.rank <= k - 1:
            rec(i + 1, nxt, chosen + [i])
        rec(i + 1, red, chosen)

    rec(0, RowReducer(F), [])
    return DistanceSearch(n - best[0], best[0], best[1], best[2])


def _full_rank(tower: FieldTower, G) -> int:
    k = len(G)
    if mat_rank(tower, G) != k:
        raise RankDeficiencyError("generator matrix must have full row rank")
    return k


def oracle_min_distance(tower: FieldTower, G, cap: int = DISTANCE_CAP) -> int:
    n = len(G[0])
    if n > cap:
        raise CapExceededError(f"n={n} exceeds distance cap {cap}")
    k = _full_rank(tower, G)
    return distance_search(tower.top, _columns(G), k).d


def punctured_distance(tower: FieldTower, G, support) -> Optional[int]:
    """Minimum distance of the code punctured to ``support`` (None if it is {0})."""
    cols = _columns(G, support)
    red = RowReducer(tower.top)
    for c in cols:
        red.add(c)
    if red.rank == 0:
        return None
    return distance_search(tower.top, cols, red.rank).d


@dataclass(frozen=True)
class DlocWitness:
    i: int
    r: int
    support: tuple[int, ...]


class _PuncturedCache:
    def __init__(self, tower, G):
        self.tower, self.G, self.memo = tower, G, {}

    def __call__(self, support):
        if support not in self.memo:
            self.memo[support] = punctured_distance(self.tower, self.G, support)
        return self.memo[support]


def _check_delta(tower, G, delta, cap):
    n = len(G[0])
    if n > cap:
        raise CapExceededError(f"n={n} exceeds locality cap {cap}")
    d = oracle_min_distance(tower, G)
    if not 2 <= delta <= d:
        raise ConstraintError(f"delta={delta} outside [2, d={d}]: no locality witness exists")
    return n


def _dloc(pd, n, i, delta) -> DlocWitness:
    for r in range(1, n - delta + 2):
        for S in itertools.combinations(range(n), r + delta - 1):
            if i in S and pd(S) == delta:
                return DlocWitness(i, r, S)
    raise ConstraintError(f"no locality witness for symbol {i}")  # excluded by delta <= d


def oracle_dloc(tower: FieldTower, G, i: int, delta: int, cap: int = DLOC_CAP) -> DlocWitness:
    """Smallest r with a support S containing i, |S| = r+delta-1 and d(C|_S) = delta."""
    n = _check_delta(tower, G, delta, cap)
    return _dloc(_PuncturedCache(tower, G), n, i, delta)


def oracle_dloc_all(tower: FieldTower, G, delta: int, cap: int = DLOC_CAP) -> list[DlocWitness]:
    n = _check_delta(tower, G, delta, cap)
    pd = _PuncturedCache(tower, G)
    return [_dloc(pd, n, i, delta) for i in range(n)]


def profile_from_witnesses(delta: int, wits) -> LocalityProfile:
    r_max = max(w.r for w in wits)
    counts = [0] * r_max
    for w in wits:
        counts[w.r - 1] += 1
    return LocalityProfile(delta, tuple(counts))


def oracle_profile(tower: FieldTower, G, delta: int, cap: int = DLOC_CAP) -> LocalityProfile:
    return profile_from_witnesses(delta, oracle_dloc_all(tower, G, delta, cap))


def minimal_witness_violations(tower: FieldTower, G, delta: int, wits) -> list[tuple[int, int]]:
    """Pairs (j, i) where i, of larger locality, sits in a minimal witness of j.

    Every minimal-size support around j is enumerated; a nonempty result would
    contradict the locality values in ``wits``.
    """
    n = len(G[0])
    pd = _PuncturedCache(tower, G)
    bad = []
    for wj in wits:
        higher = {w.i for w in wits if w.r > wj.r}
        if not higher:
            continue
        for S in itertools.combinations(range(n), wj.r + delta - 1):
            if wj.i in S and higher.intersection(S) and pd(S) == delta:
                bad.extend((wj.i, i) for i in sorted(higher.intersection(S)))
    return bad


@dataclass(frozen=True)
class AuxRanks:
    partition: tuple[tuple[int, ...], ...]
    xi: tuple[int, ...]
    rho: int
    rank_bound: int
    k_bounds: tuple[int, ...]  # k_j computed from the class sizes

    @property
    def xi_within_k_bounds(self) -> bool:
        return all(x <= kb for x, kb in zip(self.xi, self.k_bounds))


def oracle_aux_ranks(tower: FieldTower, G, partition, delta: int) -> AuxRanks:
    """Rank increments xi_j of G over the nested unions N_1, N_1+N_2, ..."""
    n = len(G[0])
    k = _full_rank(tower, G)
    flat = [i for part in partition for i in part]
    if sorted(flat) != list(range(n)):
        raise ConstraintError("partition must cover every symbol exactly once")
    red = RowReducer(tower.top)
    cols = _columns(G)
    xi = []
    for part in partition:
        before = red.rank
        for i in part:
            red.add(cols[i])
        xi.append(red.rank - before)
    acc, rho = 0, None
    for j, x in enumerate(xi, 1):
        acc += x
        if acc == k:
            rho = j
            break
    sizes = [len(p) for p in partition]
    head_xi = sum(xi[: rho - 1])
    head_red = sum(sizes[j] - xi[j] for j in range(rho - 1))
    value = n - k + 1 - head_red - (-(-(k - head_xi) // rho) - 1) * (delta - 1)
    kb = tuple(derive_params(s, j, delta).k for j, s in enumerate(sizes, 1))
    return AuxRanks(tuple(tuple(p) for p in partition), tuple(xi), rho, value, kb)


def partition_from_witnesses(wits) -> list[list[int]]:
    r_max = max(w.r for w in wits)
    parts = [[] for _ in range(r_max)]
    for w in wits:
        parts[w.r - 1].append(w.i)
    return parts


def oracle_worst_pattern(code: LrcCode, e: int, cap: int = PATTERN_CAP) -> int:
    """Minimum remaining rank over every survivor set of size n-e."""
    if code.n > cap:
        raise CapExceededError(f"n={code.n} exceeds pattern cap {cap}")
    if not 0 <= e <= code.n:
        raise ValueError(f"erasure count {e} outside [0, {code.n}]")
    return min(lrc_erank(code, S) for S in itertools.combinations(range(code.n), code.n - e))


def oracle_min_rank_distance(gab: GabidulinCode, guard: int = RANK_DISTANCE_GUARD) -> int:
    """Smallest F_q-rank over all nonzero codewords.

    Scaling a codeword by a nonzero top-field element is an F_q-linear
    bijection and keeps its rank, so messages are normalised to have a
    leading 1.
    """
    T = gab.tower
    if T.order ** gab.k > guard:
        raise CapExceededError(f"q^(t k) = {T.order ** gab.k} exceeds guard {guard}")
    best = math.inf
    for lead in range(gab.k):
        for tail in itertools.product(range(T.order), repeat=gab.k - lead - 1):
            msg = [0] * lead + [1] + list(tail)
            best = min(best, rank_over_base(T, gab_encode(gab, msg)))
    return int(best)
