"""Line-oriented text format for state tensors.

::

    # optional comments
    dims 2 2
    amp 1 1 0.70710678118654757 0
    amp 2 2 0.70710678118654757 0

Indices are 1-based; unlisted amplitudes are zero.  Floats are written with
17 significant digits so that ``parse_state_file(write_state_file(psi))``
reproduces every amplitude bit for bit.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DimensionError, FormatError, MultiIndexError
from .state import StateTensor, flat_offset, multi_index, validate_dims


def _float(tok: str, lineno: int) -> float:
    try:
        return float(tok)
    except ValueError:
        raise FormatError(f"malformed number {tok!r}", lineno) from None


def parse_state_file(text: str) -> StateTensor:
    dims = None
    amps = None
    seen = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0].startswith("#"):
            continue
        head, args = tokens[0], tokens[1:]
        if head == "dims":
            if dims is not None:
                raise FormatError("duplicate dims header", lineno)
            try:
                dims = validate_dims(int(a) for a in args)
            except (ValueError, DimensionError) as exc:
                raise FormatError(f"bad dims header: {exc}", lineno) from None
            amps = np.zeros(math.prod(dims), dtype=np.complex128)
        elif head == "amp":
            if dims is None:
                raise FormatError("amp line before dims header", lineno)
            if len(args) != len(dims) + 2:
                raise FormatError(f"expected {len(dims)} indices and 2 numbers, got {len(args)} fields", lineno)
            try:
                idx = tuple(int(a) for a in args[: len(dims)])
                off = flat_offset(dims, idx)
            except (ValueError, MultiIndexError) as exc:
                raise FormatError(f"bad index: {exc}", lineno) from None
            if off in seen:
                raise FormatError(f"duplicate amplitude for index {idx}", lineno)
            seen.add(off)
            amps[off] = complex(_float(args[-2], lineno), _float(args[-1], lineno))
        else:
            raise FormatError(f"unknown record {head!r}", lineno)
    if dims is None:
        raise FormatError("missing dims header")
    return StateTensor(dims, amps)


def _is_positive_zero(x: float) -> bool:
    return x == 0.0 and not math.copysign(1.0, x) < 0


def write_state_file(psi: StateTensor) -> str:
    lines = ["dims " + " ".join(map(str, psi.dims))]
    for off, a in enumerate(psi.amps):
        re, im = float(a.real), float(a.imag)
        if _is_positive_zero(re) and _is_positive_zero(im):
            continue
        idx = " ".join(map(str, multi_index(psi.dims, off)))
        lines.append(f"amp {idx} {re:.17g} {im:.17g}")
    return "\n".join(lines) + "\n"


def read_state(path) -> StateTensor:
    with open(path) as fh:
        return parse_state_file(fh.read())


def write_state(path, psi: StateTensor):
    with open(path, "w") as fh:
        fh.write(write_state_file(psi))
