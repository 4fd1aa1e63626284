#include "hyperprop/coexpression.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperprop/builder.hpp"

namespace hyperprop {

SimilarityMatrix coexpression_similarity(const ExpressionMatrix& x) {
  validate(x);
  // On z-scored rows, Pearson correlation is the dot product over m;
  // zero-variance rows are already all zero and fall out as s = 0.
  const ExpressionMatrix z = zscore_rows(x);
  const double m = static_cast<double>(x.n_experiments());
  Matrix s = (z.values * z.values.transpose()).cwiseAbs() / m;
  s = ((s + s.transpose()) / 2.0).eval();
  for (Index i = 0; i < s.rows(); ++i) {
    for (Index j = 0; j < s.cols(); ++j) {
      if (s(i, j) > 1.0) {
        if (s(i, j) > 1.0 + 1e-12) {
          throw std::runtime_error("coexpression_similarity: correlation above 1 beyond roundoff");
        }
        s(i, j) = 1.0;
      }
    }
  }
  return {std::move(s)};
}

AdjacencyMatrix threshold_adjacency(const SimilarityMatrix& s, double threshold) {
  if (!(threshold >= 0.0 && threshold < 1.0)) {
    throw std::invalid_argument("threshold_adjacency: threshold must lie in [0,1), got " +
                                std::to_string(threshold));
  }
  const Index n = s.size();
  Matrix a = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (s.values(i, j) > threshold) {
        a(i, j) = 1.0;
        a(j, i) = 1.0;
      }
    }
  }
  return {std::move(a), threshold};
}

OperatorMatrix graph_laplacian(const AdjacencyMatrix& a) {
  const Index n = a.size();
  if (n == 0 || a.values.cols() != n) {
    throw std::invalid_argument("graph_laplacian: adjacency must be square and non-empty");
  }
  Vector degrees = a.values.rowwise().sum();
  Matrix l = Matrix(degrees.asDiagonal()) - a.values;
  return {OperatorKind::unnormalized_laplacian, std::move(l), std::move(degrees)};
}

}  // namespace hyperprop
