"""Timing of the direct minor sum against the purity route."""

from __future__ import annotations

import timeit
from dataclasses import dataclass

from .measures import measure_F
from .oracle import F_via_purity
from .state import random_state

AGREEMENT_TOL = 1e-10


@dataclass(frozen=True)
class BenchRow:
    rep: int
    direct_s: float
    oracle_s: float
    F_direct: float
    F_oracle: float

    @property
    def ratio(self) -> float:
        return self.direct_s / self.oracle_s

    @property
    def agrees(self) -> bool:
        return abs(self.F_direct - self.F_oracle) <= AGREEMENT_TOL


def _per_call(fn) -> float:
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat=3, number=number)) / number


def benchmark(dims, reps: int = 3, seed: int = 0, workers: int | None = None) -> list[BenchRow]:
    """One row per repetition on ``random_state(dims, seed)``; times are seconds per call."""
    psi = random_state(dims, seed)
    rows = []
    for rep in range(1, reps + 1):
        f_direct = measure_F(psi, workers=workers)
        f_oracle = F_via_purity(psi)
        t_direct = _per_call(lambda: measure_F(psi, workers=workers))
        t_oracle = _per_call(lambda: F_via_purity(psi))
        rows.append(BenchRow(rep, t_direct, t_oracle, f_direct, f_oracle))
    return rows
