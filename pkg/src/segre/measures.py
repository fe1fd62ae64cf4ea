"""Entanglement measures built from squared generalized minors.

``E`` sums the squared minors of singleton swap classes only; ``F`` sums over
every class of :func:`~segre.bipartition.enumerate_classes`.  Both run over
all ordered pairs ``(k, l)``, so each distinct quadric is counted four times.
For a normalized state the ordered sum of one class equals
``2 (1 - Tr rho_S^2)``; :mod:`segre.oracle` computes that route.

The direct sums cost ``O(D^2)`` per class.  They are evaluated in fixed
chunks whose size depends only on the state shape, and partial sums are
combined in chunk order, so results are bit-identical for any ``workers``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bipartition import Bipartition, enumerate_classes
from .errors import ArityError, NormalizationError
from .quadric import count_terms
from .state import StateTensor, norm

NORMALIZATION_TOL = 1e-8
SEPARABILITY_TOL = 1e-10
CHUNK_ELEMENTS = 2**21


def check_normalized(psi: StateTensor, raw: bool = False):
    if raw or psi.normalized:
        return
    dev = abs(norm(psi) - 1.0)
    if dev > NORMALIZATION_TOL:
        raise NormalizationError(f"state norm deviates from 1 by {dev:.3e}; normalize it or pass raw=True")


def ghz_norm_const(m: int) -> float:
    """Normalization under which ``ghz(m, 2)`` has ``F = 1``."""
    return 1.0 / (2 ** (m - 1) - 1)


def resolve_norm_const(norm_const, m: int) -> float:
    if norm_const == "ghz":
        return ghz_norm_const(m)
    value = float(norm_const)
    if not value > 0:
        raise ValueError(f"norm_const must be positive, got {norm_const!r}")
    return value


def class_matrix(psi: StateTensor, S: Bipartition) -> np.ndarray:
    """Reshape ``psi`` into a ``d_S x d_{S^c}`` matrix, components in row-major order."""
    axes = [p - 1 for p in S.positions] + [p - 1 for p in S.complement]
    t = np.transpose(psi.tensor, axes)
    d_s = math.prod(psi.dims[p - 1] for p in S.positions)
    return t.reshape(d_s, -1)


def _minor_blocks(M: np.ndarray):
    """Yield minors for fixed row chunks: block[a, c, b, d] = M[a,c] M[b,d] - M[b,c] M[a,d].

    Rows ``a`` and ``b`` index the ``S`` components of ``k`` and ``l``,
    columns ``c`` and ``d`` their complement components.
    """
    d_s, d_c = M.shape
    rows = max(1, CHUNK_ELEMENTS // (d_c * d_s * d_c))
    MT = M.T
    for a0 in range(0, d_s, rows):
        A = M[a0 : a0 + rows]
        yield A[:, :, None, None] * M[None, None, :, :] - MT[None, :, :, None] * A[:, None, None, :]


def _reduce_chunks(M: np.ndarray, fn, workers: int | None) -> np.ndarray:
    blocks = _minor_blocks(M)
    if workers is None or workers <= 1:
        parts = [fn(b) for b in blocks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(fn, blocks))
    return np.array(parts)


def _sq_sum(block: np.ndarray) -> float:
    return float(np.sum(block.real**2 + block.imag**2))


def _max_abs(block: np.ndarray) -> float:
    return float(np.max(np.abs(block)))


def per_class_contribution(psi: StateTensor, S: Bipartition, *, raw: bool = False, workers: int | None = None) -> float:
    """Sum of ``|minor|^2`` over all ordered pairs for class ``S``."""
    check_normalized(psi, raw)
    return float(np.sum(_reduce_chunks(class_matrix(psi, S), _sq_sum, workers)))


def _classes(m: int, singletons_only: bool) -> list[Bipartition]:
    return [S for S in enumerate_classes(m) if S.is_singleton or not singletons_only]


def measure_E(psi: StateTensor, norm_const=1.0, *, raw: bool = False, workers: int | None = None) -> float:
    """Segre measure: singleton swap classes only."""
    check_normalized(psi, raw)
    n = resolve_norm_const(norm_const, psi.m)
    parts = [per_class_contribution(psi, S, raw=True, workers=workers) for S in _classes(psi.m, True)]
    return math.sqrt(n * math.fsum(parts))


def measure_F(psi: StateTensor, norm_const=1.0, *, raw: bool = False, workers: int | None = None) -> float:
    """Permutation-extended measure: all ``2**(m-1) - 1`` swap classes."""
    check_normalized(psi, raw)
    n = resolve_norm_const(norm_const, psi.m)
    parts = [per_class_contribution(psi, S, raw=True, workers=workers) for S in _classes(psi.m, False)]
    return math.sqrt(n * math.fsum(parts))


def _swap_sum(P: np.ndarray, m: int, positions) -> float:
    """``sum |P - P'|^2`` where ``P'`` exchanges the k- and l-axes at ``positions``."""
    axes = list(range(2 * m))
    for p in positions:
        axes[p - 1], axes[p - 1 + m] = axes[p - 1 + m], axes[p - 1]
    diff = P - np.transpose(P, axes)
    return float(np.sum(diff.real**2 + diff.imag**2))


def measure_F3(psi: StateTensor, norm_const=1.0, *, raw: bool = False) -> float:
    """Three-partite form: one swap sum per subsystem position."""
    if psi.m != 3:
        raise ArityError(f"measure_F3 needs 3 subsystems, got {psi.m}")
    check_normalized(psi, raw)
    n = resolve_norm_const(norm_const, 3)
    P = np.multiply.outer(psi.tensor, psi.tensor)  # P[k1,k2,k3,l1,l2,l3] = a_k a_l
    total = _swap_sum(P, 3, [1]) + _swap_sum(P, 3, [2]) + _swap_sum(P, 3, [3])
    return math.sqrt(n * total)


def measure_F4(psi: StateTensor, norm_const=1.0, *, raw: bool = False) -> float:
    """Four-partite form: four single swaps plus the pair swaps {1,2}, {1,3}, {1,4}."""
    if psi.m != 4:
        raise ArityError(f"measure_F4 needs 4 subsystems, got {psi.m}")
    check_normalized(psi, raw)
    n = resolve_norm_const(norm_const, 4)
    P = np.multiply.outer(psi.tensor, psi.tensor)
    singles = sum(_swap_sum(P, 4, [p]) for p in (1, 2, 3, 4))
    pairs = sum(_swap_sum(P, 4, [1, p]) for p in (2, 3, 4))
    return math.sqrt(n * (singles + pairs))


def max_minor(psi: StateTensor, *, workers: int | None = None) -> float:
    """Largest ``|minor|`` over all classes and ordered pairs."""
    return max(
        float(np.max(_reduce_chunks(class_matrix(psi, S), _max_abs, workers))) for S in enumerate_classes(psi.m)
    )


def is_separable(psi: StateTensor, tol: float = SEPARABILITY_TOL, *, workers: int | None = None) -> bool:
    check_normalized(psi)
    return max_minor(psi, workers=workers) <= tol


@dataclass
class MeasureReport:
    E: float
    F: float
    per_class: dict[Bipartition, float]
    norm_const: float
    term_counts: dict[Bipartition, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "E": self.E,
            "F": self.F,
            "norm_const": self.norm_const,
            "per_class": {str(S): v for S, v in self.per_class.items()},
            "term_counts": {str(S): v for S, v in self.term_counts.items()},
        }


def measure_report(psi: StateTensor, norm_const=1.0, *, raw: bool = False, workers: int | None = None) -> MeasureReport:
    check_normalized(psi, raw)
    n = resolve_norm_const(norm_const, psi.m)
    per_class = {S: per_class_contribution(psi, S, raw=True, workers=workers) for S in enumerate_classes(psi.m)}
    singles = [v for S, v in per_class.items() if S.is_singleton]
    return MeasureReport(
        E=math.sqrt(n * math.fsum(singles)),
        F=math.sqrt(n * math.fsum(per_class.values())),
        per_class=per_class,
        norm_const=n,
        term_counts=count_terms(psi.dims).per_class,
    )
