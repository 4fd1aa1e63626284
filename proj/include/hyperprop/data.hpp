#pragma once

#include <string>
#include <vector>

#include "hyperprop/hypergraph.hpp"

namespace hyperprop {

/// Genes-by-experiments expression values with per-gene identifiers.
struct ExpressionMatrix {
  Matrix values;
  std::vector<std::string> gene_ids;

  Index n_genes() const { return values.rows(); }
  Index n_experiments() const { return values.cols(); }
};

/// Throws unless ids are unique, shapes agree, and there are at least two
/// experiment columns.
void validate(const ExpressionMatrix& x);

/// Genes-by-classes binary functional annotations.
struct AnnotationMatrix {
  Matrix values;
  std::vector<std::string> gene_ids;
  std::vector<std::string> class_ids;

  Index n_genes() const { return values.rows(); }
  Index n_classes() const { return values.cols(); }
};

/// Throws unless every entry is exactly 0 or 1 and identifier lists match
/// the matrix shape.
void validate(const AnnotationMatrix& ann);

/// Classes with at least one positive and one negative example. Classes
/// failing this are excluded from evaluation and reported as such.
std::vector<bool> evaluable_classes(const AnnotationMatrix& ann);

}  // namespace hyperprop
