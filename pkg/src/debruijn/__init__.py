"""Binary de Bruijn sequence generation via greedy feedback rules.

The package builds sequences with a greedy generator that prefers the
complement of a feedback function's output, verifies the graph
conditions under which that generator provably yields de Bruijn
cycles, enumerates the named sequence families F1-F6, and recovers
feedback functions from given sequences.
"""

from .bitcore import (
    MAX_ORDER,
    PeriodicSequence,
    State,
    canonical_rotation,
    companion,
    complement_sequence,
    conjugate,
    cyclic_windows,
    cyclically_equal,
    is_de_bruijn,
    shift_append,
    windows,
)
from .boolfn import (
    AnfFunction,
    complement_fn,
    evaluate,
    format_anf,
    from_primitive_poly,
    from_truth_table,
    is_nonsingular,
    parse_anf,
    shift_embed,
)
from .errors import (
    AnfSyntaxError,
    ArityMismatchError,
    BadInitialStateError,
    BadLengthError,
    BadOrderError,
    BadParamsError,
    BadTError,
    DeBruijnError,
    DegreeOutOfRangeError,
    DegreeTooLargeError,
    NonTerminatingError,
    NotDeBruijnError,
    NotDeBruijnSeedError,
    NotPrimitiveError,
    OrderTooLargeError,
    WindowTooLongError,
)
from .families import (
    FamilyEntry,
    FamilyResult,
    debruijn_feedback,
    euler_totient,
    extra_function,
    f1_count,
    f1_generate,
    f2_generate,
    f3_generate,
    f4_generate,
    f5_count_formula,
    f5_enumerate,
    f6_enumerate,
    fsr_cycle,
)
from .fsrgraph import (
    ConditionReport,
    CycleForest,
    StateGraph,
    build_graph,
    check_gpo_conditions,
    children,
    decompose,
    is_leaf,
    successor,
    summary,
    to_dot,
)
from .gpo import GpoRun, format_trace, prefer_one, prefer_zero, run_gpo
from .reverse import (
    all_debruijn_sequences,
    derive_feedback,
    enumerate_pairs,
    pairs_to_csv,
    pairs_to_json,
)
from .variants import (
    PrimPoly,
    enumerate_primitive,
    is_primitive,
    m_sequence,
    prefer_no,
    prim_poly_complement_run,
    prim_poly_run,
    special_fn_run,
)

__version__ = "0.1.0"
