"""fsrkit: equivalence-preserving transformation of feedback shift registers
between Fibonacci and Galois configurations, with gate-cost minimization."""

from .expr import (
    And,
    Anf,
    BoolExpr,
    CMOS_90NM,
    Const,
    Cost,
    GateCostModel,
    GateSpec,
    Iff,
    Implies,
    Not,
    Or,
    ParseError,
    Var,
    Xor,
    anf_to_expr,
    eval_expr,
    gate_cost,
    parse,
    render,
    to_anf,
)
from .stp import (
    FsrSpec,
    PermutationTransform,
    StructureMatrix,
    TransitionMatrix,
    coordinate_structure,
    decode_state,
    depends_on,
    encode_state,
    format_delta,
    galois_transition,
    output_bit,
    parse_delta,
    restrict_support,
    structure_matrix,
    structure_to_delta,
    swap_matrix,
    synthesize_expr,
    transition_from_delta,
    transition_to_delta,
)
from .fib import feedback_of, fib_transition, is_fibonacci
from .fib2gal import (
    CountAudit,
    GaloisCandidate,
    PairClasses,
    SelectedCandidate,
    classify_pairs,
    conjugate,
    count_distinct_equivalents,
    enumerate_equivalents,
    partition_permutations,
    select_minimal,
)
from .gal2fib import (
    DerivedDigraph,
    EquivalenceResult,
    GaloisRealization,
    MinStageResult,
    OutputSeq,
    PartialTransition,
    all_output_sequences,
    derived_digraph,
    equivalent,
    format_sequence,
    galois_from_sequences,
    min_stage_fibonacci,
    normalize_sequence,
    output_sequence,
    parse_sequence,
    realizable,
    simulate,
)

__version__ = "0.1.0"
