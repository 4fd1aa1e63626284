#pragma once

#include "hyperprop/data.hpp"
#include "hyperprop/operators.hpp"

namespace hyperprop {

/// Absolute Pearson correlation between every pair of gene profiles,
/// entries in [0,1]. The diagonal is 1 except for zero-variance profiles,
/// which correlate 0 with everything including themselves.
struct SimilarityMatrix {
  Matrix values;

  Index size() const { return values.rows(); }
};

SimilarityMatrix coexpression_similarity(const ExpressionMatrix& x);

/// Simple-graph adjacency from thresholding: edge iff s(i,j) strictly
/// exceeds the threshold, never on the diagonal.
struct AdjacencyMatrix {
  Matrix values;
  double threshold = 0.5;

  Index size() const { return values.rows(); }
};

AdjacencyMatrix threshold_adjacency(const SimilarityMatrix& s, double threshold);

/// Un-normalized graph Laplacian D - A. Isolated vertices (zero rows) are
/// allowed; the regularized solve stays well-posed for any gamma > 0.
OperatorMatrix graph_laplacian(const AdjacencyMatrix& a);

}  // namespace hyperprop
