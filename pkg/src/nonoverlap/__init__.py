"""Variable-length non-overlapping binary strings and variable-dimension
non-overlapping binary matrices: construction, counting and brute-force checks."""

from nonoverlap.bitstrings import (
    DomainError,
    canonical_B,
    canonical_T,
    gen_inner_strings,
    gen_V_family,
    gen_V_level,
    is_bifix_free,
    is_factor,
    strings_overlap,
)
from nonoverlap.counting import (
    BoundPair,
    card_D_matrices,
    card_V_bounds,
    card_V_matrices,
    catalan,
    d_correction,
    kbonacci,
    r_count,
)
from nonoverlap.dyck import (
    canonical_B_dyck,
    canonical_T_dyck,
    gen_D_family,
    gen_dyck,
    is_dyck,
)
from nonoverlap.matrices import (
    BinaryMatrix,
    OverlapMode,
    OverlapReport,
    build_D_matrix_family,
    build_M,
    build_V_matrix_family,
    matrix_overlap,
)
from nonoverlap.verify import (
    FamilyParams,
    RefusalError,
    Violation,
    WitnessOutcome,
    brute_r_oracle,
    matrix_expansion_witnesses,
    reconcile_counts,
    string_expansion_witnesses,
    verify_matrix_family,
    verify_string_set,
)

__version__ = "0.1.0"
