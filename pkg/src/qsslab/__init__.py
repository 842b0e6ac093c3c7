"""Numerical laboratory for (3,5) quantum secret sharing on the five-qubit code."""

from .quantum_core import (
    DensityMatrix,
    PureState,
    all_nonempty_subsets,
    eigenvalues_hermitian,
    hermitian_eig,
    reduced_state,
    share_subset,
    trace_distance,
    trace_norm,
    von_neumann_entropy,
)
from .code5 import (
    CODE_TABLE,
    CodeTable,
    DistanceReport,
    PauliOperator,
    QubitSecret,
    apply_pauli,
    encode_classical,
    encode_quantum,
    verify_distance,
)
from .access_analysis import (
    AccessReport,
    Classification,
    ClassicalReconstruction,
    IndeterminateClassificationError,
    QuantumReconstruction,
    SecretPrior,
    SubsetVerdict,
    UNIFORM_PRIOR,
    UnqualifiedSubsetError,
    access_structure_report,
    classify_subset,
    codeword_reductions,
    holevo_information,
    reconstruct_classical,
    reconstruct_quantum,
)
from .classical_bound import (
    BoundReport,
    LinearScheme,
    SearchReport,
    SubsetStatus,
    ThresholdParams,
    check_bound,
    gf2_in_span,
    gf2_rank,
    realizes_threshold,
    scheme_subset_status,
    search_linear_schemes,
)

__version__ = "0.1.0"

__all__ = [
    "AccessReport",
    "BoundReport",
    "CODE_TABLE",
    "Classification",
    "ClassicalReconstruction",
    "CodeTable",
    "DensityMatrix",
    "DistanceReport",
    "IndeterminateClassificationError",
    "LinearScheme",
    "PauliOperator",
    "PureState",
    "QuantumReconstruction",
    "QubitSecret",
    "SearchReport",
    "SecretPrior",
    "SubsetStatus",
    "SubsetVerdict",
    "ThresholdParams",
    "UNIFORM_PRIOR",
    "UnqualifiedSubsetError",
    "access_structure_report",
    "all_nonempty_subsets",
    "apply_pauli",
    "check_bound",
    "classify_subset",
    "codeword_reductions",
    "eigenvalues_hermitian",
    "encode_classical",
    "encode_quantum",
    "gf2_in_span",
    "gf2_rank",
    "hermitian_eig",
    "holevo_information",
    "realizes_threshold",
    "reconstruct_classical",
    "reconstruct_quantum",
    "reduced_state",
    "scheme_subset_status",
    "search_linear_schemes",
    "share_subset",
    "trace_distance",
    "trace_norm",
    "verify_distance",
    "von_neumann_entropy",
]
