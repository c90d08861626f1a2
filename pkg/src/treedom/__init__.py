"""Exact total co-independent domination toolkit for trees.

Computes the independence number, total domination number, and total
co-independent domination number on trees with witness sets, tests the two
extremal families (those attaining n - beta and n - #leaves), builds and
verifies operation certificates from P_4, generates the named extremal
families, and exhaustively verifies the characterizations over all
non-isomorphic trees up to a configurable order.
"""

from .census import (
    CensusRecord,
    check_distance_remark,
    check_minimality_agreement,
    classify,
    enumerate_trees,
    records_to_csv,
    run_census,
)
from .characterize import (
    Certificate,
    attains_lower_bound,
    attains_upper_bound,
    certificate_from_text,
    certificate_to_text,
    decompose_to_p4,
    exhaustive_sequence_search,
    structural_upper_bound_check,
    verify_certificate,
)
from .errors import (
    BadParameterError,
    BadSpecError,
    CertificateMismatchError,
    EmptyInputError,
    InternalError,
    InvalidStepError,
    NotATcoiSetError,
    NotATreeError,
    ParseError,
    PreconditionViolatedError,
    TooLargeError,
    TreedomError,
    UndefinedInvariantError,
    VertexOutOfRangeError,
)
from .generators import (
    FamilyFSpec,
    OperationStep,
    apply_operation,
    comb,
    double_star,
    family_f,
    path,
    prufer_decode,
    q_tree,
    random_tree,
    spider,
    star,
)
from .solvers import (
    InvariantReport,
    all_tcoi_sets,
    brute_force,
    in_some_optimal_set,
    independence_number,
    invariant_report,
    invariant_value,
    is_independent_set,
    is_minimal_tcoi_set,
    is_tcoi_set,
    is_total_dominating_set,
    optimal_sets,
    tcoi_number,
    total_domination_number,
)
from .trees import (
    StructureReport,
    Tree,
    bfs_distances,
    canonical_code,
    center,
    diameter,
    distance,
    distance_matrix,
    is_isomorphic,
    parse_edge_list,
    parse_graph6,
    serialize_edge_list,
    serialize_graph6,
    structure,
)

__version__ = "1.0.0"
