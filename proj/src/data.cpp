#include "hyperprop/data.hpp"

#include <stdexcept>
#include <unordered_set>

namespace hyperprop {

namespace {

void check_unique_ids(const std::vector<std::string>& ids, const std::string& what) {
  std::unordered_set<std::string> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) {
      throw std::invalid_argument(what + ": duplicate identifier '" + id + "'");
    }
  }
}

}  // namespace

void validate(const ExpressionMatrix& x) {
  if (x.values.rows() == 0) {
    throw std::invalid_argument("expression matrix: no genes");
  }
  if (x.values.cols() < 2) {
    throw std::invalid_argument("expression matrix: need at least 2 experiments, got " +
                                std::to_string(x.values.cols()));
  }
  if (static_cast<Index>(x.gene_ids.size()) != x.values.rows()) {
    throw std::invalid_argument("expression matrix: gene id count does not match rows");
  }
  check_unique_ids(x.gene_ids, "expression matrix");
}

void validate(const AnnotationMatrix& ann) {
  if (ann.values.rows() == 0 || ann.values.cols() == 0) {
    throw std::invalid_argument("annotation matrix: empty");
  }
  if (static_cast<Index>(ann.gene_ids.size()) != ann.values.rows() ||
      static_cast<Index>(ann.class_ids.size()) != ann.values.cols()) {
    throw std::invalid_argument("annotation matrix: identifier lists do not match shape");
  }
  check_unique_ids(ann.gene_ids, "annotation matrix genes");
  check_unique_ids(ann.class_ids, "annotation matrix classes");
  for (Index i = 0; i < ann.values.rows(); ++i) {
    for (Index j = 0; j < ann.values.cols(); ++j) {
      const double v = ann.values(i, j);
      if (v != 0.0 && v != 1.0) {
        throw std::invalid_argument("annotation matrix: entry for gene '" + ann.gene_ids[i] +
                                    "', class '" + ann.class_ids[j] + "' is not binary");
      }
    }
  }
}

std::vector<bool> evaluable_classes(const AnnotationMatrix& ann) {
  std::vector<bool> usable(ann.n_classes(), false);
  for (Index j = 0; j < ann.n_classes(); ++j) {
    const double positives = ann.values.col(j).sum();
    usable[j] = positives > 0.0 && positives < static_cast<double>(ann.n_genes());
  }
  return usable;
}

}  // namespace hyperprop
