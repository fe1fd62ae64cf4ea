"""Generalized 2x2 minors and the distinct quadric generators they define.

For a class ``S`` the minor of a pair of multi-indices ``(k, l)`` is
``alpha_k alpha_l - alpha_k' alpha_l'`` with ``(k', l') = swap_indices(k, l, S)``.
Up to sign, the four ordered pairs ``(k, l)``, ``(l, k)``, ``(k', l')``,
``(l', k')`` give the same polynomial; a :class:`QuadricTerm` is the
lexicographically smallest of them.  Pairs that agree on all of ``S`` or on
all of ``S^c`` give the zero polynomial and are never enumerated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .bipartition import Bipartition, enumerate_classes, swap_indices
from .errors import ClassError, TrivialTermError
from .state import MultiIndex, StateTensor, multi_index, strides, validate_dims


@dataclass(frozen=True)
class QuadricTerm:
    cls: Bipartition
    k: MultiIndex
    l: MultiIndex

    def __str__(self):
        fmt = lambda t: "(" + ",".join(map(str, t)) + ")"
        return f"S={self.cls} k={fmt(self.k)} l={fmt(self.l)}"


def eval_minor(psi: StateTensor, S: Bipartition, k: Sequence[int], l: Sequence[int]) -> complex:
    k2, l2 = swap_indices(k, l, S)
    return psi[k] * psi[l] - psi[k2] * psi[l2]


def is_trivial(k: Sequence[int], l: Sequence[int], S: Bipartition) -> bool:
    """True iff ``k`` and ``l`` agree on all of ``S`` or on all of its complement."""
    inside = all(k[p - 1] == l[p - 1] for p in S.positions)
    outside = all(k[p - 1] == l[p - 1] for p in S.complement)
    return inside or outside


def canonical_rep(k: Sequence[int], l: Sequence[int], S: Bipartition) -> QuadricTerm:
    k, l = tuple(k), tuple(l)
    if is_trivial(k, l, S):
        raise TrivialTermError(f"minor of {k}, {l} about {S} is identically zero")
    k2, l2 = swap_indices(k, l, S)
    best = min([(k, l), (l, k), (k2, l2), (l2, k2)], key=lambda p: p[0] + p[1])
    return QuadricTerm(S, *best)


def _split_offsets(dims: tuple[int, ...], S: Bipartition) -> tuple[np.ndarray, np.ndarray]:
    """Per flat offset, the contribution of the ``S`` and ``S^c`` components."""
    st = strides(dims)
    idx = np.indices(dims).reshape(len(dims), -1)
    inside = [p - 1 for p in S.positions]
    outside = [p - 1 for p in S.complement]
    part_s = sum(idx[j] * st[j] for j in inside)
    part_c = sum(idx[j] * st[j] for j in outside)
    return np.asarray(part_s), np.asarray(part_c)


def enumerate_terms(dims: Sequence[int], S: Bipartition) -> Iterator[QuadricTerm]:
    """Yield every distinct non-trivial term of class ``S`` in lexicographic ``(k, l)`` order.

    Row-major offsets order multi-indices lexicographically, so a pair is
    canonical iff its key ``off_k * D + off_l`` is the smallest in its orbit.
    """
    dims = validate_dims(dims)
    if S.m != len(dims):
        raise ClassError(f"class {S} is for m={S.m}, dims have {len(dims)} subsystems")
    D = math.prod(dims)
    ps, pc = _split_offsets(dims, S)
    for k in range(D):
        l = np.arange(D)
        keep = (ps[l] != ps[k]) & (pc[l] != pc[k])
        l = l[keep]
        k2 = ps[l] + pc[k]
        l2 = ps[k] + pc[l]
        key = k * D + l
        canon = (key < l * D + k) & (key < k2 * D + l2) & (key < l2 * D + k2)
        for off in l[canon]:
            yield QuadricTerm(S, multi_index(dims, k), multi_index(dims, int(off)))


def class_term_count(dims: Sequence[int], S: Bipartition) -> int:
    """Closed form: ``d_S (d_S - 1) d_c (d_c - 1) / 4`` non-trivial terms."""
    d_s = math.prod(dims[p - 1] for p in S.positions)
    d_c = math.prod(dims) // d_s
    return d_s * (d_s - 1) * d_c * (d_c - 1) // 4


@dataclass(frozen=True)
class TermCounts:
    per_class: dict[Bipartition, int]
    singleton: int
    multi: int

    @property
    def total(self) -> int:
        return self.singleton + self.multi

    def __str__(self):
        return f"singleton: {self.singleton}  multi: {self.multi}  total: {self.total}"


def count_terms(dims: Sequence[int]) -> TermCounts:
    dims = validate_dims(dims)
    per_class = {S: class_term_count(dims, S) for S in enumerate_classes(len(dims))}
    singleton = sum(n for S, n in per_class.items() if S.is_singleton)
    multi = sum(n for S, n in per_class.items() if not S.is_singleton)
    return TermCounts(per_class, singleton, multi)

