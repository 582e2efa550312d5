"""Exact log-determinants of sparse Gaussian models whose interaction graph is
the replacement product of complete graphs, with a dense Cholesky oracle."""

from ._repdet import (
    CholeskyFactor,
    DenseSymMatrix,
    Graph,
    LogDetReport,
    ModelSpec,
    NotPositiveDefiniteError,
    OracleCapExceededError,
    Permutation,
    Rotation,
    SparseSymMatrix,
    VariableIndex,
    __version__,
    apply_permutation,
    asymptotic_logdet_per_variable,
    build_dual_diagonal,
    build_dual_information_matrix,
    build_information_matrix,
    canonical_rotation_complete,
    cholesky,
    closed_form_logdet,
    complete_graph,
    covariance_selection_graph,
    dense_to_sparse,
    differential_entropy,
    dual_logdet,
    duality_residual,
    export_matrix_market,
    homogeneous_logdet,
    import_matrix_market,
    local_pairwise_covariance,
    local_pairwise_precision,
    make_report,
    oracle_logdet,
    pairwise_covariance_logdet,
    replacement_product,
    sparse_to_dense,
    variable_index,
    write_edge_list,
    write_report_json,
)

__all__ = [
    "CholeskyFactor",
    "DenseSymMatrix",
    "Graph",
    "LogDetReport",
    "ModelSpec",
    "NotPositiveDefiniteError",
    "OracleCapExceededError",
    "Permutation",
    "Rotation",
    "SparseSymMatrix",
    "VariableIndex",
    "__version__",
    "apply_permutation",
    "asymptotic_logdet_per_variable",
    "build_dual_diagonal",
    "build_dual_information_matrix",
    "build_information_matrix",
    "canonical_rotation_complete",
    "cholesky",
    "closed_form_logdet",
    "complete_graph",
    "covariance_selection_graph",
    "dense_to_sparse",
    "differential_entropy",
    "dual_logdet",
    "duality_residual",
    "export_matrix_market",
    "homogeneous_logdet",
    "import_matrix_market",
    "local_pairwise_covariance",
    "local_pairwise_precision",
    "make_report",
    "oracle_logdet",
    "pairwise_covariance_logdet",
    "replacement_product",
    "sparse_to_dense",
    "variable_index",
    "write_edge_list",
    "write_report_json",
]
