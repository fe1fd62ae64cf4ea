"""The measures E and F, and their purity-based cross-check.

For a normalized state the ordered sum of squared minors of a class S is
2 (1 - Tr rho_S^2), so F can be rebuilt from reduced-state purities.

Run: python demos/03_measures_and_oracle.py
"""

import math

from segre import (
    E_via_purity,
    F_via_purity,
    bipartite_concurrence,
    ghz,
    measure_E,
    measure_F,
    measure_F3,
    measure_F4,
    measure_report,
    random_state,
    w_state,
)

# %% Named states
rows = [
    ("Bell", ghz(2)),
    ("GHZ3", ghz(3)),
    ("W3", w_state(3)),
    ("GHZ4", ghz(4)),
    ("W4", w_state(4)),
]
print(f"{'state':>6} {'E':>10} {'F':>10} {'F (purity)':>12}")
for name, psi in rows:
    print(f"{name:>6} {measure_E(psi):10.6f} {measure_F(psi):10.6f} {F_via_purity(psi):12.6f}")
print("sqrt(3), sqrt(8/3), sqrt(7) =", math.sqrt(3), math.sqrt(8 / 3), math.sqrt(7))

# %% For m <= 3 every class is a singleton, so E == F; at m = 4 the pair classes add to F
rep = measure_report(ghz(4))
for S, v in rep.per_class.items():
    print(f"S={S} contribution {v:.6f}")

# %% The free normalization constant: 'ghz' scales GHZ qubit states to F = 1
print("GHZ5 F with norm_const='ghz':", measure_F(ghz(5), "ghz"))

# %% Explicit three- and four-partite forms agree with the generic sum
psi3, psi4 = random_state((2, 3, 2), 1), random_state((2, 2, 2, 2), 1)
print("F3 - F:", measure_F3(psi3) - measure_F(psi3))
print("F4 - F:", measure_F4(psi4) - measure_F(psi4))
print("E (purity) - E:", E_via_purity(psi4) - measure_E(psi4))

# %% Bipartite states: F is the generalized concurrence
psi = random_state((3, 4), 2)
print("F, concurrence:", measure_F(psi), bipartite_concurrence(psi))
