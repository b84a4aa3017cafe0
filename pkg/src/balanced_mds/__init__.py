"""Balanced sparsest generator matrices for MDS codes.

Construct a k x n binary support pattern that is sparsest (row weight
n-k+1), balanced (column weights within one of each other), and MDS-
realizable; fill it with random field entries into a true MDS generator
matrix; and use the result for encoding, erasure / error decoding, and
a sensor-network workload simulation.
"""

from .balance import BalanceTrace, SwapRecord, balance, construct_balanced_support, find_swap_row
from .codec import (
    DecodeResult,
    GeneratorMatrix,
    InconsistentWordError,
    InstantiationError,
    encode,
    erasure_decode,
    error_decode,
    format_gm,
    instantiate,
    minimum_distance_bruteforce,
    parse_gm,
    support_of,
    verify_mds,
)
from .field import (
    FieldElement,
    FieldMatrix,
    PrimeField,
    SingularMatrixError,
    determinant,
    field_size_bound,
    is_prime,
    smallest_prime_above,
    solve_linear,
)
from .simulate import SimulationConfig, SimulationReport, corrupt, run_simulation
from .support import (
    BipartiteGraph,
    P3Witness,
    SupportMatrix,
    check_all_k_subsets_matchable,
    check_hall_columns,
    check_p1,
    check_p2,
    check_p3_bruteforce,
    check_p3_matching,
    column_weights,
    format_sm,
    initial_cyclic_matrix,
    max_bipartite_matching,
    parse_sm,
)

__version__ = "0.1.0"
