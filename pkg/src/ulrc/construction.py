"""Gabidulin-precoded LRC with unequal locality.

k message symbols are precoded by a Gabidulin code of length n_gab, the
codeword is cut into chunks of j symbols (m_j chunks of each size j), and
every chunk is expanded by a systematic [j+delta-1, j, delta] Reed-Solomon
code over F_q. Groups appear in the codeword in ascending chunk size.

Symbol indices are 0-based in this API; files and the CLI use 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ConstraintError, DataLossError, ParseError, RepairInfeasibleError
from .fields import FieldTower, mat_solve, mat_vec, rank_over_base
from .gabidulin import gab_encode, gab_new
from .linpoly import frobenius_powers, lp_interpolate
from .locality import LocalityRequirement

DESCRIPTOR_FORMAT = "ulrc-code/1"


@dataclass(frozen=True)
class LrcParams:
    tower: FieldTower
    delta: int
    m: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(v) for v in self.m))
        if self.delta < 2:
            raise ConstraintError(f"delta must be >= 2, got {self.delta}")
        if not self.m or any(v < 0 for v in self.m) or self.m[-1] == 0:
            raise ConstraintError(f"m must be non-negative with a nonzero last entry: {self.m}")
        if not self.r_star <= self.k <= self.n_gab:
            raise ConstraintError(f"k range: need r*={self.r_star} <= k={self.k} <= n_gab={self.n_gab}")
        if self.n_gab > self.tower.t:
            raise ConstraintError(f"t too small: n_gab={self.n_gab} > t={self.tower.t}")
        widest = max(j + self.delta - 1 for j, v in enumerate(self.m, 1) if v)
        if self.tower.q < widest:
            raise ConstraintError(f"q too small: q={self.tower.q} < largest local length {widest}")

    @property
    def r_star(self) -> int:
        return len(self.m)

    @property
    def n_gab(self) -> int:
        return sum(v * j for j, v in enumerate(self.m, 1))

    @property
    def n_vec(self) -> tuple[int, ...]:
        return tuple(v * (j + self.delta - 1) for j, v in enumerate(self.m, 1))

    @property
    def n(self) -> int:
        return sum(self.n_vec)

    @property
    def requirement(self) -> LocalityRequirement:
        return LocalityRequirement(self.delta, self.n_vec)

    def to_json(self) -> dict:
        T = self.tower
        return {"p": T.p, "a": T.a, "t": T.t, "delta": self.delta, "m": list(self.m), "k": self.k}

    @classmethod
    def from_json(cls, obj) -> "LrcParams":
        try:
            tower = FieldTower(int(obj["p"]), int(obj.get("a", 1)), int(obj["t"]), obj.get("g"), obj.get("h"))
            return cls(tower, int(obj["delta"]), tuple(obj["m"]), int(obj["k"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad params: {exc}") from exc


@dataclass(frozen=True)
class LocalGroup:
    j: int
    members: tuple[int, ...]
    chunk: tuple[int, ...]
    generator: tuple[tuple[int, ...], ...]  # j x (j+delta-1) over F_q


def rs_systematic_generator(F, j: int, length: int) -> tuple[tuple[int, ...], ...]:
    """Systematic RS generator over F at the points with encodings 0..length-1.

    Row i holds the i-th Lagrange basis polynomial (for the first j points)
    evaluated at every point, so the first j columns form the identity.
    """
    if length > F.order:
        raise ConstraintError(f"RS length {length} exceeds field size {F.order}")
    pts = list(range(length))
    rows = []
    for i in range(j):
        denom = 1
        for l in range(j):
            if l != i:
                denom = F.mul(denom, F.sub(pts[i], pts[l]))
        dinv = F.inv(denom)
        row = []
        for s in pts:
            num = 1
            for l in range(j):
                if l != i:
                    num = F.mul(num, F.sub(s, pts[l]))
            row.append(F.mul(num, dinv))
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class LrcCode:
    params: LrcParams
    groups: tuple[LocalGroup, ...]
    gab_points: tuple[int, ...]
    symbol_points: tuple[int, ...]
    G: tuple[tuple[int, ...], ...]
    group_of: tuple[int, ...]

    @property
    def tower(self):
        return self.params.tower

    @property
    def n(self):
        return len(self.symbol_points)

    @property
    def k(self):
        return self.params.k

    @property
    def delta(self):
        return self.params.delta

    @property
    def requirement(self):
        return self.params.requirement


def _assemble(params: LrcParams, groups, gab_points) -> LrcCode:
    T = params.tower
    n = sum(len(g.members) for g in groups)
    if sorted(i for g in groups for i in g.members) != list(range(n)):
        raise ConstraintError("local groups must partition the symbol indices")
    ys = [0] * n
    group_of = [0] * n
    for gi, g in enumerate(groups):
        xs = [gab_points[c] for c in g.chunk]
        for col, s in enumerate(g.members):
            ys[s] = T.dot([row[col] for row in g.generator], xs)
            group_of[s] = gi
    cols = [frobenius_powers(T, y, params.k) for y in ys]
    G = tuple(tuple(c[l] for c in cols) for l in range(params.k))
    return LrcCode(params, tuple(groups), tuple(gab_points), tuple(ys), G, tuple(group_of))


def lrc_construct(params: LrcParams) -> LrcCode:
    T = params.tower
    gab_points = tuple(T.basis(i) for i in range(params.n_gab))
    groups = []
    pos = chunk = 0
    for j, count in enumerate(params.m, 1):
        width = j + params.delta - 1
        gen = rs_systematic_generator(T.base, j, width)
        for _ in range(count):
            groups.append(LocalGroup(j, tuple(range(pos, pos + width)), tuple(range(chunk, chunk + j)), gen))
            pos += width
            chunk += j
    return _assemble(params, groups, gab_points)


def encode_with_generator(code: LrcCode, message) -> list[int]:
    """message . G"""
    if len(message) != code.k:
        raise ValueError(f"message length {len(message)} != k={code.k}")
    return mat_vec(code.tower, message, code.G)


def lrc_encode(code: LrcCode, message) -> list[int]:
    """Gabidulin-encode, then MDS-encode every chunk."""
    if len(message) != code.k:
        raise ValueError(f"message length {len(message)} != k={code.k}")
    T = code.tower
    gab = gab_encode(gab_new(T, len(code.gab_points), code.k, code.gab_points), message)
    out = [0] * code.n
    for g in code.groups:
        local = [gab[c] for c in g.chunk]
        for col, s in enumerate(g.members):
            out[s] = T.dot(local, [row[col] for row in g.generator])
    return out


def lrc_erank(code: LrcCode, T) -> int:
    """F_q-rank of the evaluation points carried by the symbols in T."""
    T = list(T)
    for i in T:
        if not 0 <= i < code.n:
            raise IndexError(f"symbol index {i} out of range")
    return rank_over_base(code.tower, [code.symbol_points[i] for i in T])


def erank_by_groups(code: LrcCode, T) -> int:
    """sum over groups of min(|T & group|, j); valid when every local code is MDS."""
    counts = [0] * len(code.groups)
    for i in set(T):
        counts[code.group_of[i]] += 1
    return sum(min(c, g.j) for c, g in zip(counts, code.groups))


@dataclass(frozen=True)
class RepairResult:
    value: int
    reads: int
    read_indices: tuple[int, ...]


def lrc_local_repair(code: LrcCode, word, i: int) -> RepairResult:
    """Rebuild symbol i from j surviving members of its local group."""
    g = code.groups[code.group_of[i]]
    survivors = [s for s in g.members if s != i and word[s] is not None]
    if len(survivors) < g.j:
        raise RepairInfeasibleError(
            f"group of symbol {i + 1} has {len(survivors)} survivors, needs {g.j}; use a global decode"
        )
    use = survivors[: g.j]
    col = {s: c for c, s in enumerate(g.members)}
    A = [[row[col[s]] for row in g.generator] for s in use]
    u = mat_solve(code.tower, A, [word[s] for s in use])
    if u is None:
        raise RuntimeError("local generator is not MDS on the chosen survivors")
    value = code.tower.dot(u, [row[col[i]] for row in g.generator])
    return RepairResult(value, g.j, tuple(use))


def lrc_global_decode(code: LrcCode, word) -> list[int]:
    """Message from a word whose erased symbols are None."""
    alive = [s for s, v in enumerate(word) if v is not None]
    rank = lrc_erank(code, alive)
    if rank < code.k:
        raise DataLossError(f"remaining rank {rank} < k={code.k}")
    pts = [(code.symbol_points[s], word[s]) for s in alive]
    return list(lp_interpolate(code.tower, pts, code.k).coeffs)


@dataclass(frozen=True)
class ErasurePattern:
    erased: frozenset[int]
    remaining_erank: int
    remaining_grank: int
    decodable: bool

    @property
    def erased_1based(self) -> list[int]:
        return sorted(i + 1 for i in self.erased)


def make_pattern(code: LrcCode, erased) -> ErasurePattern:
    erased = frozenset(erased)
    rest = [i for i in range(code.n) if i not in erased]
    er = lrc_erank(code, rest)
    return ErasurePattern(erased, er, min(er, code.k), er >= code.k)


def lrc_worst_pattern(code: LrcCode, e: int) -> ErasurePattern:
    """Keep n-e symbols greedily from the smallest groups first."""
    if not 0 <= e <= code.n:
        raise ValueError(f"erasure count {e} outside [0, {code.n}]")
    order = sorted(range(len(code.groups)), key=lambda gi: (code.groups[gi].j, gi))
    keep, left = [], code.n - e
    for gi in order:
        take = code.groups[gi].members[:left]
        keep.extend(take)
        left -= len(take)
    erased = frozenset(range(code.n)) - set(keep)
    er = erank_by_groups(code, keep)
    return ErasurePattern(erased, er, min(er, code.k), er >= code.k)


def lrc_min_distance(code: LrcCode) -> int:
    worst_ok = max(e for e in range(code.n + 1) if lrc_worst_pattern(code, e).decodable)
    return worst_ok + 1


# --- descriptor I/O ---

def to_descriptor(code: LrcCode) -> dict:
    p = code.params
    return {
        "format": DESCRIPTOR_FORMAT,
        "tower": p.tower.to_json(),
        "delta": p.delta,
        "m": list(p.m),
        "k": p.k,
        "n": code.n,
        "groups": [
            {
                "j": g.j,
                "symbols": [s + 1 for s in g.members],
                "chunk": [c + 1 for c in g.chunk],
                "generator": [list(r) for r in g.generator],
            }
            for g in code.groups
        ],
        "gab_points": [str(x) for x in code.gab_points],
        "symbol_points": [str(y) for y in code.symbol_points],
    }


def from_descriptor(desc: dict) -> LrcCode:
    """Rebuild a code from a descriptor, trusting its stored local generators.

    Derived data (symbol points, generator matrix) is recomputed, so an edited
    local generator propagates into the code for verification to judge.
    """
    try:
        if desc.get("format") != DESCRIPTOR_FORMAT:
            raise ParseError(f"unknown descriptor format {desc.get('format')!r}")
        tower = FieldTower.from_json(desc["tower"])
        params = LrcParams(tower, int(desc["delta"]), tuple(desc["m"]), int(desc["k"]))
        groups = []
        for g in desc["groups"]:
            j = int(g["j"])
            gen = tuple(tuple(int(v) for v in row) for row in g["generator"])
            if len(gen) != j or any(len(r) != len(g["symbols"]) for r in gen):
                raise ParseError(f"generator shape does not match group of size {j}")
            if any(not tower.is_base(v) for r in gen for v in r):
                raise ParseError("local generator entries must lie in F_q")
            groups.append(LocalGroup(j, tuple(s - 1 for s in g["symbols"]), tuple(c - 1 for c in g["chunk"]), gen))
        gab_points = tuple(tower.check(int(x)) for x in desc["gab_points"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (ParseError, ConstraintError)):
            raise
        raise ParseError(f"bad code descriptor: {exc}") from exc
    return _assemble(params, groups, gab_points)


def group_summary(code: LrcCode) -> list[tuple[int, int]]:
    """(pre-size j, encoded size) per group, in codeword order."""
    return [(g.j, len(g.members)) for g in code.groups]


def parse_word(lines, n: Optional[int] = None) -> list[Optional[int]]:
    """Codeword file lines -> symbols, with '*' meaning erased."""
    out = []
    for ln in lines:
        ln = ln.strip()
        if not ln:
            continue
        if ln == "*":
            out.append(None)
        else:
            try:
                out.append(int(ln))
            except ValueError as exc:
                raise ParseError(f"bad symbol line {ln!r}") from exc
    if n is not None and len(out) != n:
        raise ParseError(f"expected {n} symbols, got {len(out)}")
    return out


def format_word(word) -> str:
    return "".join(("*" if v is None else str(v)) + "\n" for v in word)
