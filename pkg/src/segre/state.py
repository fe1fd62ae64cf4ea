"""Dense pure states on a product of finite-dimensional subsystems.

A state on ``m`` subsystems with dimensions ``(N_1, ..., N_m)`` is stored as
a flat complex128 array of length ``D = N_1 * ... * N_m`` in row-major order,
subsystem 1 varying slowest.  Multi-indices are 1-based tuples
``(k_1, ..., k_m)`` with ``1 <= k_j <= N_j``; they are converted to 0-based
flat offsets internally.  Because the layout is row-major, ordering flat
offsets is the same as ordering multi-indices lexicographically.

Random states use NumPy's ``default_rng(seed)`` (PCG64).  A complex normal
variate is ``(x + 1j*y) / sqrt(2)`` where ``x, y`` are consecutive draws of
``standard_normal``; a vector of ``n`` variates consumes ``2n`` draws, real
and imaginary parts interleaved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateStateError, DimensionError, FormatError, MultiIndexError

MAX_TOTAL_DIM = 2**20
NORM_TOL = 1e-12

MultiIndex = tuple[int, ...]


def validate_dims(dims: Iterable[int]) -> tuple[int, ...]:
    """Return ``dims`` as a tuple of ints, raising DimensionError if invalid."""
    try:
        dims = tuple(int(n) for n in dims)
    except (TypeError, ValueError) as exc:
        raise DimensionError(f"dimensions must be integers: {dims!r}") from exc
    if len(dims) < 2:
        raise DimensionError(f"need at least 2 subsystems, got {len(dims)}")
    if any(n < 2 for n in dims):
        raise DimensionError(f"every subsystem dimension must be >= 2: {dims}")
    if math.prod(dims) > MAX_TOTAL_DIM:
        raise DimensionError(f"total dimension {math.prod(dims)} exceeds {MAX_TOTAL_DIM}")
    return dims


def strides(dims: Sequence[int]) -> tuple[int, ...]:
    """Row-major strides (subsystem 1 slowest)."""
    out = [1] * len(dims)
    for j in range(len(dims) - 2, -1, -1):
        out[j] = out[j + 1] * dims[j + 1]
    return tuple(out)


def flat_offset(dims: Sequence[int], idx: Sequence[int]) -> int:
    """0-based row-major offset of the 1-based multi-index ``idx``.

    >>> flat_offset((2, 3, 2), (1, 3, 2))
    5
    """
    if len(idx) != len(dims):
        raise MultiIndexError(f"index {tuple(idx)} has {len(idx)} components, dims have {len(dims)}")
    off = 0
    for k, n in zip(idx, dims):
        if not 1 <= k <= n:
            raise MultiIndexError(f"index {tuple(idx)} out of range for dims {tuple(dims)}")
        off = off * n + (k - 1)
    return off


def multi_index(dims: Sequence[int], offset: int) -> MultiIndex:
    """Inverse of :func:`flat_offset`."""
    total = math.prod(dims)
    if not 0 <= offset < total:
        raise MultiIndexError(f"offset {offset} out of range [0, {total})")
    out = []
    for n in reversed(dims):
        offset, r = divmod(offset, n)
        out.append(r + 1)
    return tuple(reversed(out))


@dataclass(frozen=True, eq=False)
class StateTensor:
    """Immutable dense coefficient tensor of a pure multipartite state.

    ``amps`` is a read-only flat complex128 array.  ``normalized`` is set
    only by constructors that guarantee unit norm.
    """

    dims: tuple[int, ...]
    amps: np.ndarray = field(repr=False)
    normalized: bool = False

    def __post_init__(self):
        dims = validate_dims(self.dims)
        amps = np.array(self.amps, dtype=np.complex128).reshape(-1)
        if amps.size != math.prod(dims):
            raise DimensionError(f"{amps.size} amplitudes given for dims {dims}")
        amps.flags.writeable = False
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amps", amps)

    @property
    def m(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        return self.amps.size

    @property
    def tensor(self) -> np.ndarray:
        """Read-only view with shape ``dims``."""
        return self.amps.reshape(self.dims)

    def __getitem__(self, idx: Sequence[int]) -> complex:
        return complex(self.amps[flat_offset(self.dims, idx)])

    def __eq__(self, other):
        if not isinstance(other, StateTensor):
            return NotImplemented
        return self.dims == other.dims and np.array_equal(self.amps, other.amps)

    __hash__ = None

    def permute_subsystems(self, order: Sequence[int]) -> StateTensor:
        """Relabel subsystems; ``order`` lists old 1-based positions in their new order."""
        axes = [p - 1 for p in order]
        if sorted(axes) != list(range(self.m)):
            raise DimensionError(f"{tuple(order)} is not a permutation of 1..{self.m}")
        t = np.transpose(self.tensor, axes)
        return StateTensor(t.shape, t.reshape(-1), self.normalized)

    def apply_local(self, position: int, op: np.ndarray) -> StateTensor:
        """Apply a ``N_j x N_j`` operator to subsystem ``position`` (1-based)."""
        j = position - 1
        t = np.moveaxis(np.tensordot(op, self.tensor, axes=([1], [j])), 0, j)
        return StateTensor(self.dims, t.reshape(-1))

    def scaled(self, c: complex) -> StateTensor:
        return StateTensor(self.dims, self.amps * c)


def new_state(dims: Iterable[int], entries: Iterable[tuple[Sequence[int], complex]] = ()) -> StateTensor:
    """Build a tensor from sparse ``(multi_index, amplitude)`` entries.

    Unlisted amplitudes are zero.  The result is not normalized.
    """
    dims = validate_dims(dims)
    amps = np.zeros(math.prod(dims), dtype=np.complex128)
    seen = set()
    for idx, value in entries:
        off = flat_offset(dims, tuple(idx))
        if off in seen:
            raise FormatError(f"duplicate index {tuple(idx)}")
        seen.add(off)
        amps[off] = value
    return StateTensor(dims, amps)


def norm(psi: StateTensor) -> float:
    return math.sqrt(float(np.sum(psi.amps.real**2 + psi.amps.imag**2)))


def is_normalized(psi: StateTensor, tol: float = NORM_TOL) -> bool:
    return psi.normalized or abs(norm(psi) ** 2 - 1.0) <= tol


def normalize(psi: StateTensor) -> StateTensor:
    """Return ``psi / norm(psi)``; idempotent on already-normalized tensors."""
    if psi.normalized:
        return psi
    n = norm(psi)
    if n <= 1e-30:
        raise DegenerateStateError("cannot normalize a zero-norm state")
    return StateTensor(psi.dims, psi.amps / n, normalized=True)


def product_state(factors: Sequence[Sequence[complex]]) -> StateTensor:
    """Tensor product of per-subsystem vectors, ``alpha_k = prod_j v_j[k_j]``.

    The factors are used as given (the product is normalized only if each
    factor is).
    """
    vecs = [np.asarray(v, dtype=np.complex128).reshape(-1) for v in factors]
    if len(vecs) < 2:
        raise DimensionError(f"need at least 2 factors, got {len(vecs)}")
    for j, v in enumerate(vecs, start=1):
        if not np.any(v):
            raise DegenerateStateError(f"factor {j} is the zero vector")
    t = vecs[0]
    for v in vecs[1:]:
        t = np.multiply.outer(t, v)
    unit = all(abs(np.vdot(v, v).real - 1.0) <= NORM_TOL for v in vecs)
    return StateTensor(tuple(v.size for v in vecs), t.reshape(-1), normalized=unit)


def ghz(m: int, d: int = 2) -> StateTensor:
    """``(|1...1> + ... + |d...d>) / sqrt(d)`` on ``m`` subsystems of dimension ``d``."""
    dims = validate_dims((d,) * m)
    amps = np.zeros(d**m, dtype=np.complex128)
    step = sum(d**j for j in range(m))  # offset of (i,...,i) is (i-1)*step
    amps[np.arange(d) * step] = 1 / math.sqrt(d)
    return StateTensor(dims, amps, normalized=True)


def w_state(m: int) -> StateTensor:
    """Equal superposition of the ``m`` single-excitation qubit basis states."""
    dims = validate_dims((2,) * m)
    amps = np.zeros(2**m, dtype=np.complex128)
    amps[[2 ** (m - 1 - j) for j in range(m)]] = 1 / math.sqrt(m)
    return StateTensor(dims, amps, normalized=True)


def _complex_normal(rng: np.random.Generator, n: int) -> np.ndarray:
    x = rng.standard_normal(2 * n)
    return (x[0::2] + 1j * x[1::2]) / math.sqrt(2)


def random_state(dims: Iterable[int], seed: int) -> StateTensor:
    """Haar-random pure state, bit-reproducible for a given ``(dims, seed)``."""
    dims = validate_dims(dims)
    rng = np.random.default_rng(seed)
    return normalize(StateTensor(dims, _complex_normal(rng, math.prod(dims))))


def random_product_state(dims: Iterable[int], seed: int) -> StateTensor:
    """Product of independent random unit vectors, one per subsystem in order."""
    dims = validate_dims(dims)
    rng = np.random.default_rng(seed)
    factors = []
    for n in dims:
        v = _complex_normal(rng, n)
        factors.append(v / np.linalg.norm(v))
    t = product_state(factors)
    return StateTensor(t.dims, t.amps, normalized=True)
