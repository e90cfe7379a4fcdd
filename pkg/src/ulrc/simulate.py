"""Seeded node-failure simulation with a local-first repair policy.

Randomness comes only from ``random.Random(seed).random()`` (MT19937, whose
``random()`` stream CPython keeps stable across versions and platforms).
Integers are derived from it by ``_below`` and failure sets by a partial
Fisher-Yates shuffle, so the whole run is reproducible from the seed.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from typing import Optional

from .construction import (
    LrcParams,
    lrc_construct,
    lrc_encode,
    lrc_erank,
    lrc_global_decode,
    lrc_local_repair,
    lrc_worst_pattern,
)
from .errors import ParseError, RepairInfeasibleError


@dataclass
class SimConfig:
    params: dict
    rounds: int = 100
    fail_prob: Optional[float] = None
    failures_per_round: Optional[int] = None
    seed: int = 0
    adversarial: bool = False

    def __post_init__(self):
        if self.rounds < 1:
            raise ParseError("rounds must be >= 1")
        if (self.fail_prob is None) == (self.failures_per_round is None):
            raise ParseError("give exactly one of fail_prob and failures_per_round")
        if self.fail_prob is not None and not 0.0 <= self.fail_prob <= 1.0:
            raise ParseError(f"fail_prob={self.fail_prob} outside [0, 1]")
        if self.failures_per_round is not None and self.failures_per_round < 0:
            raise ParseError("failures_per_round must be >= 0")
        if self.adversarial and self.failures_per_round is None:
            raise ParseError("adversarial placement needs failures_per_round")
        if not 0 <= self.seed < 2**64:
            raise ParseError("seed must be a 64-bit unsigned integer")

    @classmethod
    def from_json(cls, obj) -> "SimConfig":
        try:
            return cls(**obj)
        except TypeError as exc:
            raise ParseError(f"bad simulation config: {exc}") from exc


@dataclass
class SimReport:
    rounds: int = 0
    local_repairs: int = 0
    symbols_read: int = 0
    global_decodes: int = 0
    global_symbols_read: int = 0
    data_loss_events: int = 0
    repair_mismatches: int = 0
    availability: float = 1.0
    per_round: list = field(default_factory=list)

    def to_dict(self):
        return asdict(self)


def _below(rng: random.Random, n: int) -> int:
    """Integer in [0, n) assembled from 32-bit slices of random()."""
    bits = max(1, (n - 1).bit_length())
    v = 0
    for _ in range(-(-bits // 32) + 1):
        v = (v << 32) | int(rng.random() * 2**32)
    return v % n


def _pick(rng: random.Random, n: int, count: int) -> list[int]:
    idx = list(range(n))
    for s in range(count):
        r = s + _below(rng, n - s)
        idx[s], idx[r] = idx[r], idx[s]
    return sorted(idx[:count])


def run_simulation(cfg: SimConfig) -> SimReport:
    params = LrcParams.from_json(cfg.params)
    code = lrc_construct(params)
    rng = random.Random(cfg.seed)
    message = [_below(rng, code.tower.order) for _ in range(code.k)]
    original = lrc_encode(code, message)
    n = code.n
    rep = SimReport(rounds=cfg.rounds)
    if cfg.failures_per_round is not None and cfg.failures_per_round > n:
        raise ParseError(f"failures_per_round={cfg.failures_per_round} exceeds n={n}")

    for rnd in range(cfg.rounds):
        if cfg.adversarial:
            failed = sorted(lrc_worst_pattern(code, cfg.failures_per_round).erased)
        elif cfg.failures_per_round is not None:
            failed = _pick(rng, n, cfg.failures_per_round)
        else:
            failed = [i for i in range(n) if rng.random() < cfg.fail_prob]
        word = [None if i in set(failed) else v for i, v in enumerate(original)]
        alive = [i for i in range(n) if word[i] is not None]
        remaining = lrc_erank(code, alive)
        row = {"round": rnd + 1, "failed": [i + 1 for i in failed], "local_repairs": 0,
               "symbols_read": 0, "global_decode": False, "data_loss": False, "remaining_erank": remaining}

        pending = []
        for i in failed:
            try:
                res = lrc_local_repair(code, word, i)
            except RepairInfeasibleError:
                pending.append(i)
                continue
            row["local_repairs"] += 1
            row["symbols_read"] += res.reads
            rep.repair_mismatches += res.value != original[i]
        if pending:
            if remaining >= code.k:
                rebuilt = lrc_encode(code, lrc_global_decode(code, word))
                rep.repair_mismatches += rebuilt != original
                row["global_decode"] = True
                rep.global_decodes += 1
                rep.global_symbols_read += code.k
            else:
                row["data_loss"] = True
                rep.data_loss_events += 1

        rep.local_repairs += row["local_repairs"]
        rep.symbols_read += row["symbols_read"]
        rep.per_round.append(row)

    rep.availability = (cfg.rounds - rep.data_loss_events) / cfg.rounds
    return rep
