"""Gabidulin (MRD) codes: evaluation of linearized polynomials at F_q-independent points."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstraintError, DataLossError, RankDeficiencyError
from .fields import FieldTower, rank_over_base
from .linpoly import LinearizedPoly, lp_eval, lp_interpolate


@dataclass(frozen=True)
class GabidulinCode:
    tower: FieldTower
    n: int
    k: int
    points: tuple[int, ...]


def gab_new(tower: FieldTower, n: int, k: int, points=None) -> GabidulinCode:
    if not 1 <= k <= n <= tower.t:
        raise ConstraintError(f"need 1 <= k <= n <= t, got k={k}, n={n}, t={tower.t}")
    if points is None:
        points = [tower.basis(i) for i in range(n)]
    points = tuple(tower.check(x) for x in points)
    if len(points) != n:
        raise ConstraintError(f"expected {n} evaluation points, got {len(points)}")
    rank = rank_over_base(tower, points)
    if rank < n:
        raise RankDeficiencyError(f"evaluation points have F_q-rank {rank} < n={n}")
    return GabidulinCode(tower, n, k, points)


def gab_encode(code: GabidulinCode, message) -> list[int]:
    if len(message) != code.k:
        raise ValueError(f"message length {len(message)} != k={code.k}")
    f = LinearizedPoly(code.tower, tuple(message))
    return [lp_eval(f, x) for x in code.points]


def gab_decode_erasures(code: GabidulinCode, received) -> list[int]:
    """Message from a received word whose erased positions hold None."""
    if len(received) != code.n:
        raise ValueError(f"received length {len(received)} != n={code.n}")
    pts = [(x, c) for x, c in zip(code.points, received) if c is not None]
    if len(pts) < code.k:
        raise DataLossError(f"{len(pts)} survivors, need k={code.k}")
    return list(lp_interpolate(code.tower, pts, code.k).coeffs)
