"""Command-line front end.

Exit codes: 0 success, 1 input or parse error, 2 domain error (state not
normalized, zero norm, path disagreement in ``bench``).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import benchmark
from .bipartition import canonicalize, enumerate_classes
from .errors import ClassError, DegenerateStateError, DimensionError, FormatError, NormalizationError
from .measures import SEPARABILITY_TOL, check_normalized, max_minor, measure_report
from .oracle import E_via_purity, F_via_purity, bipartite_concurrence, class_purities
from .quadric import class_term_count, count_terms, enumerate_terms
from .state import random_product_state, random_state, validate_dims
from .stateio import read_state, write_state_file

ZERO_CUTOFF = 1e-12


class InputError(Exception):
    pass


def _value(v: float) -> str:
    return repr(0.0 if abs(v) <= ZERO_CUTOFF else float(v))


def _dims(text: str) -> tuple[int, ...]:
    try:
        return validate_dims(int(t) for t in text.split(","))
    except (ValueError, DimensionError) as exc:
        raise InputError(f"bad --dims {text!r}: {exc}") from None


def _norm_const(text: str):
    if text == "ghz":
        return text
    try:
        value = float(text)
    except ValueError:
        raise InputError(f"bad --norm-const {text!r}") from None
    if not value > 0:
        raise InputError(f"--norm-const must be positive, got {text}")
    return value


def _load(path: str):
    try:
        return read_state(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def cmd_measure(args, out):
    psi = _load(args.state)
    rep = measure_report(psi, _norm_const(args.norm_const), workers=args.workers)
    if args.json:
        data = rep.to_dict()
        if args.which == "e":
            data.pop("F")
        elif args.which == "f":
            data.pop("E")
        if not args.per_class:
            data.pop("per_class")
        json.dump(data, out, indent=2)
        out.write("\n")
        return
    if args.which in ("e", "both"):
        print(f"E = {_value(rep.E)}", file=out)
    if args.which in ("f", "both"):
        print(f"F = {_value(rep.F)}", file=out)
    if args.per_class:
        for S, v in rep.per_class.items():
            print(f"S={S} contribution = {_value(v)} terms = {rep.term_counts[S]}", file=out)


def cmd_terms(args, out):
    dims = _dims(args.dims)
    if args.cls is not None:
        try:
            classes = [canonicalize((int(t) for t in args.cls.split(",")), len(dims))]
        except (ValueError, ClassError) as exc:
            raise InputError(f"bad --class {args.cls!r}: {exc}") from None
    else:
        classes = enumerate_classes(len(dims))
    if args.list:
        for S in classes:
            for term in enumerate_terms(dims, S):
                print(term, file=out)
        return
    if args.cls is not None:
        print(f"S={classes[0]}: {class_term_count(dims, classes[0])}", file=out)
        return
    counts = count_terms(dims)
    for S, n in counts.per_class.items():
        print(f"S={S}: {n}", file=out)
    print(counts, file=out)


def cmd_separable(args, out):
    psi = _load(args.state)
    check_normalized(psi)
    worst = max_minor(psi, workers=args.workers)
    verdict = "separable" if worst <= args.tol else "entangled"
    print(f"{verdict} (max minor {worst:.1e})", file=out)


def cmd_oracle(args, out):
    psi = _load(args.state)
    n = _norm_const(args.norm_const)
    print(f"F = {_value(F_via_purity(psi, n))}", file=out)
    print(f"E = {_value(E_via_purity(psi, n))}", file=out)
    for S, p in class_purities(psi).items():
        print(f"S={S} purity = {p!r}", file=out)
    if psi.m == 2:
        print(f"concurrence = {_value(bipartite_concurrence(psi))}", file=out)


def cmd_random(args, out):
    dims = _dims(args.dims)
    psi = random_product_state(dims, args.seed) if args.product else random_state(dims, args.seed)
    text = write_state_file(psi)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_bench(args, out):
    rows = benchmark(_dims(args.dims), reps=args.reps, seed=args.seed, workers=args.workers)
    print(f"{'rep':>3}  {'direct_s':>12}  {'oracle_s':>12}  {'ratio':>8}  {'F_direct':>20}  {'F_oracle':>20}", file=out)
    for r in rows:
        print(
            f"{r.rep:>3}  {r.direct_s:12.3e}  {r.oracle_s:12.3e}  {r.ratio:8.1f}  {r.F_direct!r:>20}  {r.F_oracle!r:>20}",
            file=out,
        )
    bad = [r.rep for r in rows if not r.agrees]
    if bad:
        raise NormalizationError(f"direct and oracle F disagree beyond 1e-10 in reps {bad}")
    print("paths agree within 1e-10", file=out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="segre", description="Segre-variety entanglement measures for pure states.")
    sub = p.add_subparsers(dest="command", required=True)

    def workers(sp):
        sp.add_argument("--workers", type=int, default=None, help="threads for the direct sums (result is identical)")

    sp = sub.add_parser("measure", help="compute E and/or F")
    sp.add_argument("--state", required=True)
    sp.add_argument("--norm-const", default="1", help="positive float, or 'ghz' so that GHZ qubit states have F = 1")
    sp.add_argument("--which", choices=["e", "f", "both"], default="f")
    sp.add_argument("--per-class", action="store_true")
    sp.add_argument("--json", action="store_true")
    workers(sp)
    sp.set_defaults(func=cmd_measure)

    sp = sub.add_parser("terms", help="count or list distinct quadric terms")
    sp.add_argument("--dims", required=True)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print counts (default)")
    mode.add_argument("--list", action="store_true", help="list canonical terms")
    sp.add_argument("--class", dest="cls", default=None, help="restrict to one class, e.g. 1,2")
    sp.set_defaults(func=cmd_terms)

    sp = sub.add_parser("separable", help="full-separability test")
    sp.add_argument("--state", required=True)
    sp.add_argument("--tol", type=float, default=SEPARABILITY_TOL)
    workers(sp)
    sp.set_defaults(func=cmd_separable)

    sp = sub.add_parser("oracle", help="purity-based values")
    sp.add_argument("--state", required=True)
    sp.add_argument("--norm-const", default="1")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("random", help="write a random state file")
    sp.add_argument("--dims", required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--product", action="store_true")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_random)

    sp = sub.add_parser("bench", help="time direct F against the purity route")
    sp.add_argument("--dims", required=True)
    sp.add_argument("--reps", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    workers(sp)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except (InputError, FormatError, DimensionError, ClassError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NormalizationError, DegenerateStateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
