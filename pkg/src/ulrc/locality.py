"""Locality requirements and profiles with their derived parameters.

A vector ``n`` lists, for j = 1, 2, ..., how many symbols have locality j
(profile) or are required to have locality at most j (requirement).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import CapExceededError, ConstraintError, ParseError

ENUMERATION_CAP = 20


@dataclass(frozen=True)
class DerivedParams:
    n_j: int
    j: int
    delta: int
    p: int
    q: int
    m: Fraction
    k: int


def derive_params(n_j: int, j: int, delta: int) -> DerivedParams:
    if n_j < 0 or j < 1 or delta < 2:
        raise ConstraintError(f"need n_j >= 0, j >= 1, delta >= 2 (got {n_j}, {j}, {delta})")
    width = j + delta - 1
    p, q = divmod(n_j, width)
    m = Fraction(n_j, width)
    if q <= delta - 2:
        k = p * j
    else:
        k = n_j - (p + 1) * (delta - 1)  # ceil(m) = p + 1 since q > 0
    return DerivedParams(n_j, j, delta, p, q, m, k)


@dataclass(frozen=True)
class _LocalityVector:
    delta: int
    n: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(v) for v in self.n))
        if self.delta < 2:
            raise ConstraintError(f"delta must be >= 2, got {self.delta}")
        if not self.n or any(v < 0 for v in self.n):
            raise ConstraintError(f"counts must be non-negative and non-empty: {self.n}")

    @property
    def length(self) -> int:
        return sum(self.n)

    @property
    def r_star(self) -> int:
        return max(j for j, v in enumerate(self.n, 1) if v)

    @property
    def params(self) -> tuple[DerivedParams, ...]:
        return tuple(derive_params(v, j, self.delta) for j, v in enumerate(self.n, 1))

    def to_json(self) -> dict:
        return {"delta": self.delta, "n": list(self.n)}

    @classmethod
    def from_json(cls, obj):
        try:
            if isinstance(obj, str):
                obj = json.loads(obj)
            return cls(int(obj["delta"]), tuple(obj["n"]))
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            if isinstance(exc, ConstraintError):
                raise
            raise ParseError(f"bad locality vector: {exc}") from exc


@dataclass(frozen=True)
class LocalityRequirement(_LocalityVector):
    """Symbols 1..n_1 need locality <= 1, the next n_2 need <= 2, and so on."""

    def __post_init__(self):
        super().__post_init__()
        if self.n[-1] == 0:
            raise ConstraintError("the last requirement count n_{r*} must be nonzero")


@dataclass(frozen=True)
class LocalityProfile(_LocalityVector):
    """Exact per-locality symbol counts of a code.

    Trailing zeros are allowed so that profiles enumerated for a requirement
    keep its length r*.
    """

    def __post_init__(self):
        super().__post_init__()
        if not any(self.n):
            raise ConstraintError("a profile must count at least one symbol")


def _prefix(v):
    out, s = [], 0
    for x in v:
        s += x
        out.append(s)
    return out


def profile_satisfies_requirement(prof: LocalityProfile, req: LocalityRequirement) -> bool:
    if prof.delta != req.delta:
        raise ConstraintError(f"delta mismatch: {prof.delta} vs {req.delta}")
    if prof.length != req.length:
        raise ConstraintError(f"length mismatch: {prof.length} vs {req.length}")
    if prof.r_star > len(req.n):
        return False
    hat = list(prof.n) + [0] * (len(req.n) - len(prof.n))
    return all(a >= b for a, b in zip(_prefix(hat), _prefix(req.n)))


def enumerate_profiles(req: LocalityRequirement, cap: int = ENUMERATION_CAP) -> Iterator[LocalityProfile]:
    """All length-r* profiles of total n dominating ``req`` in prefix sums.

    Yields in descending lexicographic order, e.g. (2,0,0), (1,1,0), ...
    """
    n = req.length
    if n > cap:
        raise CapExceededError(f"code length {n} exceeds enumeration cap {cap}")
    need = _prefix(req.n)
    r = len(req.n)

    def rec(prefix, total):
        j = len(prefix)
        if j == r - 1:
            yield prefix + (n - total,)
            return
        for v in range(n - total, -1, -1):
            if total + v >= need[j]:
                yield from rec(prefix + (v,), total + v)

    for vec in rec((), 0):
        yield LocalityProfile(req.delta, vec)
