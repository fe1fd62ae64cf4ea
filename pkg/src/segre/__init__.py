"""Entanglement measures from generalized Segre-variety quadrics.

The direct measures sum squared 2x2 minors of the coefficient tensor over
index-swap classes; :mod:`segre.oracle` recomputes them from reduced-state
purities.
"""

from .bipartition import Bipartition, canonicalize, enumerate_classes, swap_indices
from .errors import (
    ArityError,
    ClassError,
    DegenerateStateError,
    DimensionError,
    FormatError,
    MultiIndexError,
    NormalizationError,
    SegreError,
    TrivialTermError,
)
from .measures import (
    MeasureReport,
    ghz_norm_const,
    is_separable,
    max_minor,
    measure_E,
    measure_F,
    measure_F3,
    measure_F4,
    measure_report,
    per_class_contribution,
)
from .oracle import DensityMatrix, E_via_purity, F_via_purity, bipartite_concurrence, purity, reduced_density
from .quadric import QuadricTerm, TermCounts, canonical_rep, count_terms, enumerate_terms, eval_minor, is_trivial
from .state import (
    MultiIndex,
    StateTensor,
    flat_offset,
    ghz,
    multi_index,
    new_state,
    norm,
    normalize,
    product_state,
    random_product_state,
    random_state,
    w_state,
)
from .stateio import parse_state_file, read_state, write_state, write_state_file

__version__ = "0.1.0"
