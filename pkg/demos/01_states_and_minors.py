"""States as box-shaped coefficient tensors, and the 2x2 minors that vanish on products.

Run: python demos/01_states_and_minors.py
"""

import numpy as np

from segre import (
    Bipartition,
    eval_minor,
    flat_offset,
    ghz,
    is_separable,
    max_minor,
    product_state,
    random_product_state,
    swap_indices,
    w_state,
)

# %% Indexing: 1-based multi-indices, row-major flat layout
print("offset of (1,3,2) in dims (2,3,2):", flat_offset((2, 3, 2), (1, 3, 2)))

# %% A GHZ state on three qubits has amplitude 1/sqrt(2) at (1,1,1) and (2,2,2)
g = ghz(3)
print("GHZ3 amplitudes:", np.round(g.amps.real, 4))

# %% Swapping the position-2 components between k and l gives the partner pair of a minor
k, l = (1, 1, 1), (2, 2, 2)
S = Bipartition((2,), 3)
print("swap about {2}:", swap_indices(k, l, S))
print("minor of GHZ3 about {2}:", eval_minor(g, S, k, l))

# %% Product states kill every minor, entangled states do not
p = product_state([(1, 0), (0.6, 0.8), (1j, 0)])
print("max |minor| on a product state:", max_minor(p))
for name, psi in [("random product", random_product_state((2, 3, 2), 3)), ("GHZ3", g), ("W4", w_state(4))]:
    print(f"{name:>15}: separable = {is_separable(psi)}")
