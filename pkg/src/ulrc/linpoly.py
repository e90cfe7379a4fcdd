"""Linearized (q-)polynomials f(x) = sum_i a_i x^(q^(i-1)) over F_{q^t}."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistentError, RankDeficiencyError
from .fields import BaseSpan, FieldTower, mat_solve


@dataclass(frozen=True)
class LinearizedPoly:
    tower: FieldTower
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not 1 <= len(self.coeffs) <= self.tower.t:
            raise ValueError(f"need 1 <= k <= t, got k={len(self.coeffs)}")
        for c in self.coeffs:
            self.tower.check(c)

    @property
    def k(self):
        return len(self.coeffs)

    def __call__(self, x):
        return lp_eval(self, x)


def frobenius_powers(tower: FieldTower, x: int, k: int) -> list[int]:
    """[x, x^q, ..., x^(q^(k-1))] -- one column of a Moore matrix."""
    out = [x]
    for _ in range(k - 1):
        out.append(tower.frobenius(out[-1]))
    return out


def lp_eval(f: LinearizedPoly, x: int) -> int:
    T = f.tower
    T.check(x)
    return T.dot(f.coeffs, frobenius_powers(T, x, f.k))


def select_independent(tower: FieldTower, xs, limit=None) -> list[int]:
    """Indices of a greedy left-to-right F_q-independent subset of xs."""
    span = BaseSpan(tower)
    chosen = []
    for i, x in enumerate(xs):
        if limit is not None and len(chosen) == limit:
            break
        if span.add(x):
            chosen.append(i)
    return chosen


def lp_interpolate(tower: FieldTower, points, k: int) -> LinearizedPoly:
    """Recover the q-degree < k polynomial through ``points`` = [(x, y), ...].

    A greedy independent subset of k abscissae fixes the coefficients via a
    Moore-matrix solve; every other point is then checked against the result.
    """
    points = [(tower.check(x), tower.check(y)) for x, y in points]
    if len(points) < k:
        raise RankDeficiencyError(f"need at least k={k} points, got {len(points)}")
    idx = select_independent(tower, [x for x, _ in points], limit=k)
    if len(idx) < k:
        raise RankDeficiencyError(f"evaluation points have F_q-rank {len(idx)} < k={k}")
    A = [frobenius_powers(tower, points[i][0], k) for i in idx]
    b = [points[i][1] for i in idx]
    sol = mat_solve(tower, A, b)
    if sol is None:  # Moore matrix on independent points is nonsingular
        raise RuntimeError("singular Moore matrix on independent points")
    f = LinearizedPoly(tower, tuple(sol))
    chosen = set(idx)
    for i, (x, y) in enumerate(points):
        if i not in chosen and lp_eval(f, x) != y:
            raise InconsistentError(f"point #{i} disagrees with the interpolated polynomial")
    return f
