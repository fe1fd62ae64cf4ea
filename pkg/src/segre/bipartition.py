"""Index-swap classes as canonical bipartitions of subsystem positions.

Swapping the components in positions ``S`` between two multi-indices ``k``
and ``l`` yields the same unordered pair as swapping ``S^c`` and then
exchanging ``k`` and ``l``.  Each split ``{S, S^c}`` is therefore one class,
represented by the member with fewer positions, or by the member containing
position 1 when both halves have size ``m/2``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ClassError, DimensionError


def _check_positions(S: Iterable[int], m: int) -> tuple[int, ...]:
    pos = tuple(sorted(set(int(p) for p in S)))
    if not pos:
        raise ClassError("position set is empty")
    if pos[0] < 1 or pos[-1] > m:
        raise ClassError(f"positions {pos} out of range 1..{m}")
    if len(pos) == m:
        raise ClassError(f"position set {pos} is the full set; its minor is identically zero")
    return pos


def _is_canonical(pos: tuple[int, ...], m: int) -> bool:
    return 2 * len(pos) < m or (2 * len(pos) == m and pos[0] == 1)


@dataclass(frozen=True)
class Bipartition:
    """Canonical representative ``S`` of the split ``{S, S^c}`` of ``{1..m}``."""

    positions: tuple[int, ...]
    m: int
    complement: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pos = _check_positions(self.positions, self.m)
        if not _is_canonical(pos, self.m):
            raise ClassError(f"{set(pos)} is not canonical for m={self.m}; use canonicalize()")
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "complement", tuple(p for p in range(1, self.m + 1) if p not in pos))

    def __str__(self):
        return "{" + ",".join(map(str, self.positions)) + "}"

    def __len__(self):
        return len(self.positions)

    def __contains__(self, p):
        return p in self.positions

    @property
    def is_singleton(self) -> bool:
        return len(self.positions) == 1

    def sort_key(self):
        return (len(self.positions), self.positions)


def canonicalize(S: Iterable[int], m: int) -> Bipartition:
    """Canonical class of the position set ``S`` (1-based)."""
    pos = _check_positions(S, m)
    if not _is_canonical(pos, m):
        pos = tuple(p for p in range(1, m + 1) if p not in pos)
    return Bipartition(pos, m)


def enumerate_classes(m: int) -> list[Bipartition]:
    """All ``2**(m-1) - 1`` classes, ordered by size then lexicographically."""
    if m < 2:
        raise DimensionError(f"need at least 2 subsystems, got {m}")
    return list(_classes(m))


@functools.lru_cache(maxsize=None)
def _classes(m: int) -> tuple[Bipartition, ...]:
    out = []
    for size in range(1, m // 2 + 1):
        for pos in itertools.combinations(range(1, m + 1), size):
            if _is_canonical(pos, m):
                out.append(Bipartition(pos, m))
    return tuple(out)


def swap_indices(k: Sequence[int], l: Sequence[int], S) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Exchange the components of ``k`` and ``l`` at the positions in ``S``.

    ``S`` may be a :class:`Bipartition` or any iterable of 1-based positions
    (canonical or not).

    >>> swap_indices((1, 1, 1), (2, 2, 2), [2])
    ((1, 2, 1), (2, 1, 2))
    """
    pos = S.positions if isinstance(S, Bipartition) else set(S)
    k2 = tuple(lj if j in pos else kj for j, (kj, lj) in enumerate(zip(k, l), start=1))
    l2 = tuple(kj if j in pos else lj for j, (kj, lj) in enumerate(zip(k, l), start=1))
    return k2, l2
