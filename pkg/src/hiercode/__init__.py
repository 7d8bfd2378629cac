"""Minimal binary linear codes from order ideals of two-level hierarchical posets."""

from hiercode.code import (
    BudgetExceeded,
    Codeword,
    DefiningSet,
    WeightDistribution,
    codeword,
    covers,
    generator_matrix,
    weight_distribution,
)
from hiercode.gf2 import BitVec, DimensionError, EchelonBasis, dot, enumerate_vectors, kernel, rank, reduce_to_full_rank
from hiercode.harness import predict_d, predict_d0, reproduce_proof_witnesses, sweep, verify_instance
from hiercode.minimality import (
    Method,
    MinimalityVerdict,
    Result,
    ashikhmin_barg_check,
    code_is_minimal,
    find_witness,
    h_set,
    is_minimal_definitional,
    is_minimal_geometric,
)
from hiercode.poset import (
    DefiningSetBundle,
    HierarchicalPoset,
    IdealFamily,
    OrderIdeal,
    defining_sets,
    downset,
    generated_ideal,
    is_order_ideal,
    parse_family,
)

__version__ = "0.1.0"
