"""Direct O(D^2) minor sums against the purity route.

Run: python demos/04_benchmark.py
(the same table is available as `segre bench --dims 2,2,2,2,2,2`)
"""

from segre.bench import benchmark

for dims in [(2, 2, 2, 2), (2, 2, 2, 2, 2), (2, 2, 2, 2, 2, 2), (2, 2, 2, 2, 2, 2, 2)]:
    rows = benchmark(dims, reps=1)
    r = rows[0]
    print(f"{str(dims):>24}  direct {r.direct_s:9.2e}s  oracle {r.oracle_s:9.2e}s  ratio {r.ratio:7.1f}  |dF| {abs(r.F_direct - r.F_oracle):.1e}")
