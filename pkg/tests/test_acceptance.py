"""Exit criteria, one test each; a PASS/FAIL line per criterion is printed in the summary."""

import io
import itertools
import math
import statistics
import time

import numpy as np

import segre.measures as measures
from brute import all_dims, haar_unitary, orbit_count, orbits
from conftest import ACCEPTANCE_LINES, ORACLE_SHAPES
from segre import (
    F_via_purity,
    bipartite_concurrence,
    count_terms,
    enumerate_classes,
    enumerate_terms,
    ghz,
    is_separable,
    measure_E,
    measure_F,
    measure_F3,
    measure_F4,
    measure_report,
    parse_state_file,
    per_class_contribution,
    purity,
    random_product_state,
    random_state,
    reduced_density,
    w_state,
    write_state_file,
)
from segre.bench import benchmark
from segre.cli import main


def record(n, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n:>2}: {title} -- {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_01_term_counts_four_qubits():
    t0 = time.perf_counter()
    code, out = cli("terms", "--dims", "2,2,2,2")
    elapsed = time.perf_counter() - t0
    fields = dict(part.split(": ") for part in out.splitlines()[-1].split("  "))
    got = (int(fields["singleton"]), int(fields["multi"]), int(fields["total"]))
    ok = code == 0 and got == (112, 36, 148) and elapsed < 1.0
    record(1, "four-qubit term counts 112/36/148", ok, f"got singleton/multi/total = {got} in {elapsed:.3f}s")


def test_02_term_count_oracle():
    t0 = time.perf_counter()
    shapes = all_dims(81)
    listed = [(2, 2), (2, 3), (2, 2, 2), (3, 3), (2, 2, 2, 2)]
    mismatches = []
    for dims in shapes:
        counts = count_terms(dims).per_class
        for S in enumerate_classes(len(dims)):
            positions = {p - 1 for p in S.positions}
            if counts[S] != orbit_count(dims, positions):
                mismatches.append((dims, str(S)))
            elif dims in listed or math.prod(dims) <= 24:
                expected = orbits(dims, positions)
                terms = {(tuple(i - 1 for i in t.k), tuple(i - 1 for i in t.l)) for t in enumerate_terms(dims, S)}
                if terms != {min(o, key=lambda p: p[0] + p[1]) for o in expected}:
                    mismatches.append((dims, str(S)))
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 30.0
    record(2, "term counts vs brute-force orbits, D <= 81", ok, f"{len(shapes)} shapes, {len(mismatches)} mismatches, {elapsed:.1f}s")


def test_03_purity_oracle_equivalence():
    t0 = time.perf_counter()
    worst_f = worst_class = 0.0
    n = 0
    for dims in ORACLE_SHAPES:
        for seed in range(100):
            psi = random_state(dims, 1000 + seed)
            for S in enumerate_classes(len(dims)):
                identity = 2 * (1 - purity(reduced_density(psi, S)))
                worst_class = max(worst_class, abs(per_class_contribution(psi, S) - identity))
            worst_f = max(worst_f, abs(measure_F(psi) - F_via_purity(psi)))
            n += 1
    elapsed = time.perf_counter() - t0
    ok = worst_f <= 1e-10 and worst_class <= 1e-10 and elapsed < 60
    record(3, "direct F == purity F", ok, f"{n} states, max |dF| {worst_f:.1e}, max per-class {worst_class:.1e}, {elapsed:.1f}s")


def test_04_vanishing_on_products():
    worst = 0.0
    all_sep = True
    for dims in ORACLE_SHAPES:
        for seed in range(100):
            psi = random_product_state(dims, 2000 + seed)
            worst = max(worst, measure_F(psi))
            all_sep &= is_separable(psi)
    ok = worst <= 1e-12 and all_sep
    record(4, "F vanishes on product states", ok, f"max F {worst:.1e}, all separable: {all_sep}")


def test_05_named_state_values():
    bell = ghz(2, 2)
    # closed forms from marginal purities: sqrt(sum over classes of 2 (1 - purity))
    cases = [
        ("Bell F", measure_F(bell), math.sqrt(2 * (1 - 1 / 2))),
        ("GHZ3 F", measure_F(ghz(3, 2)), math.sqrt(3 * 2 * (1 - 1 / 2))),
        ("W3 F", measure_F(w_state(3)), math.sqrt(3 * 2 * (1 - 5 / 9))),
        ("GHZ4 F", measure_F(ghz(4, 2)), math.sqrt(7 * 2 * (1 - 1 / 2))),
        ("GHZ4 E", measure_E(ghz(4, 2)), math.sqrt(4 * 2 * (1 - 1 / 2))),
        ("ghz(2,3) concurrence", bipartite_concurrence(ghz(2, 3)), math.sqrt(2 * (1 - 1 / 3))),
    ]
    errs = {name: abs(got - want) for name, got, want in cases}
    ok = max(errs.values()) <= 1e-12
    record(5, "named-state values", ok, ", ".join(f"{k} err {v:.1e}" for k, v in errs.items()))


def test_06_explicit_forms():
    shapes3 = [(2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 3, 3)]
    shapes4 = [(2, 2, 2, 2), (2, 2, 3, 2), (3, 2, 2, 2)]
    w3 = max(abs(measure_F3(p) - measure_F(p)) for p in (random_state(shapes3[i % 4], 3000 + i) for i in range(100)))
    w4 = max(abs(measure_F4(p) - measure_F(p)) for p in (random_state(shapes4[i % 3], 4000 + i) for i in range(100)))
    ok = w3 <= 1e-12 and w4 <= 1e-12
    record(6, "three/four-partite forms == generic F", ok, f"max |F3-F| {w3:.1e}, max |F4-F| {w4:.1e}")


def test_07_invariances():
    rng = np.random.default_rng(77)
    shapes = [(2, 2, 2), (2, 3, 2), (3, 3, 3), (2, 2, 2, 2), (2, 3, 2, 2)]
    worst_perm = worst_lu = 0.0
    for i in range(50):
        psi = random_state(shapes[i % len(shapes)], 5000 + i)
        order = [int(x) + 1 for x in rng.permutation(psi.m)]
        q = psi.permute_subsystems(order)
        worst_perm = max(worst_perm, abs(measure_F(q) - measure_F(psi)), abs(measure_E(q) - measure_E(psi)))
        u = psi
        for j, n in enumerate(psi.dims, start=1):
            u = u.apply_local(j, haar_unitary(n, rng))
        worst_lu = max(worst_lu, abs(measure_F(u, raw=True) - measure_F(psi)))
    ok = worst_perm <= 1e-12 and worst_lu <= 1e-10
    record(7, "relabeling and local-unitary invariance", ok, f"relabel {worst_perm:.1e}, local unitary {worst_lu:.1e}")


def test_08_bipartite_concurrence():
    worst_purity = worst_det = 0.0
    for i, dims in enumerate(itertools.islice(itertools.cycle([(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)]), 50)):
        psi = random_state(dims, 6000 + i)
        rho1 = reduced_density(psi, {1})
        worst_purity = max(worst_purity, abs(measure_F(psi, 1) - math.sqrt(2 * (1 - purity(rho1)))))
        if dims == (2, 2):
            a = psi.tensor
            worst_det = max(worst_det, abs(measure_F(psi, 1) - 2 * abs(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])))
    ok = worst_purity <= 1e-10 and worst_det <= 1e-12
    record(8, "bipartite F == generalized concurrence", ok, f"purity form {worst_purity:.1e}, 2x2 determinant form {worst_det:.1e}")


def test_09_round_trip_and_determinism(tmp_path, monkeypatch):
    exact = all(
        parse_state_file(write_state_file(p)).amps.tobytes() == p.amps.tobytes()
        for p in (random_state(ORACLE_SHAPES[i % 7], 7000 + i) for i in range(100))
    )
    path = tmp_path / "s.txt"
    path.write_text(cli("random", "--dims", "2,3,2,2", "--seed", "9")[1])
    runs = {cli("measure", "--state", str(path), "--which", "both", "--per-class", "--workers", str(w))[1] for w in (1, 4, 1)}
    psi = random_state((2, 3, 2, 2), 9)
    monkeypatch.setattr(measures, "CHUNK_ELEMENTS", 32)
    reports = [measure_report(psi, workers=w) for w in (1, 2, 4)]
    threads_same = all(r.per_class == reports[0].per_class and r.F == reports[0].F for r in reports)
    ok = exact and len(runs) == 1 and threads_same
    record(9, "state file round trip and determinism", ok, f"bit-exact: {exact}, CLI runs identical: {len(runs) == 1}, thread counts identical: {threads_same}")


def test_10_benchmark():
    rows = benchmark((2, 2, 2, 2, 2, 2), reps=3)
    agree = all(r.agrees for r in rows)
    ratio = statistics.median(r.ratio for r in rows)
    ok = agree and ratio >= 10
    record(10, "benchmark at six qubits", ok, f"agree within 1e-10: {agree}, median direct/oracle time ratio {ratio:.1f}")
