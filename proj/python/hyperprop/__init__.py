"""Hypergraph Laplacian label propagation for gene function prediction.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from hyperprop._core import (
    AdjacencyMatrix,
    AnnotationMatrix,
    ClusterAssignment,
    DegreeVectors,
    ExpressionMatrix,
    FoldPlan,
    Hypergraph,
    LabelMatrix,
    LabelRole,
    OperatorKind,
    OperatorMatrix,
    PropagationConfig,
    PropagationKind,
    PropagationResult,
    SimilarityMatrix,
    __version__,
    accuracy,
    build_initial_labels,
    cluster_count,
    coexpression_similarity,
    compute_degrees,
    evaluable_classes,
    generate_synthetic,
    graph_laplacian,
    incidence_from_clusters,
    kfold_split,
    kmeans,
    predict,
    propagate_closed_form,
    propagate_iterative,
    propagation_matrix,
    quadratic_form,
    random_walk_laplacian,
    run_experiment,
    solve_sym_regularized,
    solve_unnormalized,
    spectrum_extremes,
    symmetric_laplacian,
    threshold_adjacency,
    unnormalized_laplacian,
    zscore_rows,
)

__all__ = [
    "AdjacencyMatrix",
    "AnnotationMatrix",
    "ClusterAssignment",
    "DegreeVectors",
    "ExpressionMatrix",
    "FoldPlan",
    "Hypergraph",
    "LabelMatrix",
    "LabelRole",
    "OperatorKind",
    "OperatorMatrix",
    "PropagationConfig",
    "PropagationKind",
    "PropagationResult",
    "SimilarityMatrix",
    "__version__",
    "accuracy",
    "build_initial_labels",
    "cluster_count",
    "coexpression_similarity",
    "compute_degrees",
    "evaluable_classes",
    "generate_synthetic",
    "graph_laplacian",
    "incidence_from_clusters",
    "kfold_split",
    "kmeans",
    "predict",
    "propagate_closed_form",
    "propagate_iterative",
    "propagation_matrix",
    "quadratic_form",
    "random_walk_laplacian",
    "run_experiment",
    "solve_sym_regularized",
    "solve_unnormalized",
    "spectrum_extremes",
    "symmetric_laplacian",
    "threshold_adjacency",
    "unnormalized_laplacian",
    "zscore_rows",
]
