"""Function-correcting codes over prime fields.

Systematic codes that protect a function of the message rather than the
message itself: build the required-distance matrices, search minimum-length
parity codes, assemble and verify encoders, and evaluate every redundancy
bound — all exactly, at desk scale.
"""

__version__ = "0.1.0"

from .bounds import (
    AqEstimate,
    AqTable,
    BoundEntry,
    BoundReport,
    CompareRow,
    a_q_auto,
    a_q_exact,
    a_q_upper,
    bgs_bound,
    bound_report,
    compare_report,
    fdm_upper_bound,
    optimality_check,
    plotkin_linear_bound,
    systematic_ecc_bound,
    theorem1_bound,
    two_t_bound,
    zll_bound,
)
from .cosets import (
    SubspaceSelection,
    build_cosetwise_encoder,
    cosetwise_decode,
    cosetwise_requirements,
    reduced_problem,
    select_subspace_representatives,
)
from .distance import (
    DistanceMatrix,
    NqSearchResult,
    ParityCode,
    binary_plotkin_bound,
    build_drm,
    build_fdm,
    matrix_from_lists,
    n_q_exact,
    verify_d_code,
)
from .errors import BudgetExceededError, CodeNotFoundError, DecodingFailureError
from .fields import (
    PrimeField,
    VectorIndex,
    hamming_ball_size,
    hamming_distance,
    hamming_weight,
)
from .functions import (
    CosetDecomposition,
    FunctionClass,
    FunctionSpec,
    classify,
    coset_decomposition,
    function_distance,
    image_size,
    linear_function,
    table_function,
)
from .graph import (
    BlockCirculantReport,
    FccEncoder,
    FccGraph,
    build_graph,
    cartesian_bound_graph,
    decode,
    extract_fcc,
    find_fcc_violation,
    independence_number,
    verify_block_circulant,
    verify_fcc,
)
from .mis import MisResult, max_independent_set
from .spectrum import (
    Spectrum,
    SpectralBoundResult,
    cvetkovic_alpha_bound,
    eigenvalue_redundancy_bound,
    eigenvalues_via_tensor_dft,
    spectrum_of,
)

__all__ = [
    "AqEstimate",
    "AqTable",
    "BlockCirculantReport",
    "BoundEntry",
    "BoundReport",
    "BudgetExceededError",
    "CodeNotFoundError",
    "CompareRow",
    "CosetDecomposition",
    "DecodingFailureError",
    "DistanceMatrix",
    "FccEncoder",
    "FccGraph",
    "FunctionClass",
    "FunctionSpec",
    "MisResult",
    "NqSearchResult",
    "ParityCode",
    "PrimeField",
    "SpectralBoundResult",
    "Spectrum",
    "SubspaceSelection",
    "VectorIndex",
    "a_q_auto",
    "a_q_exact",
    "a_q_upper",
    "bgs_bound",
    "binary_plotkin_bound",
    "bound_report",
    "build_cosetwise_encoder",
    "build_drm",
    "build_fdm",
    "build_graph",
    "cartesian_bound_graph",
    "classify",
    "compare_report",
    "coset_decomposition",
    "cosetwise_decode",
    "cosetwise_requirements",
    "cvetkovic_alpha_bound",
    "decode",
    "eigenvalue_redundancy_bound",
    "eigenvalues_via_tensor_dft",
    "extract_fcc",
    "fdm_upper_bound",
    "find_fcc_violation",
    "function_distance",
    "hamming_ball_size",
    "hamming_distance",
    "hamming_weight",
    "image_size",
    "independence_number",
    "linear_function",
    "matrix_from_lists",
    "max_independent_set",
    "n_q_exact",
    "optimality_check",
    "plotkin_linear_bound",
    "reduced_problem",
    "select_subspace_representatives",
    "spectrum_of",
    "systematic_ecc_bound",
    "table_function",
    "theorem1_bound",
    "two_t_bound",
    "verify_block_circulant",
    "verify_d_code",
    "verify_fcc",
    "zll_bound",
]
