"""Counting the distinct quadric generators per swap class.

A term is an unordered minor up to sign; each non-trivial ordered pair (k, l)
lies in an orbit of four pairs, so a class with composite dimensions d_S and
d_c has d_S (d_S - 1) d_c (d_c - 1) / 4 terms.

Run: python demos/02_quadric_counts.py
"""

from segre import Bipartition, count_terms, enumerate_terms

# %% The single 2x2 determinant of a two-qubit state
for t in enumerate_terms((2, 2), Bipartition((1,), 2)):
    print(t)

# %% Three qubits: six terms per singleton class
print(count_terms((2, 2, 2)))

# %% Four qubits: 28 terms per singleton class (112 in all), 36 per pair class
c = count_terms((2, 2, 2, 2))
for S, n in c.per_class.items():
    print(f"S={S}: {n}")
print(c)

# %% A qutrit-qubit mix
print(count_terms((3, 2, 2)))
