#pragma once

#include <cstdint>
#include <utility>

#include "hyperprop/data.hpp"

namespace hyperprop {

/// Planted-module generator standing in for a real expression dataset.
/// Genes are split into modules with near-equal sizes; each module gets
/// its own mean expression profile and Gaussian noise around it, and each
/// functional class is the union of the modules congruent to it, so genes
/// with similar profiles share function by construction.
struct SyntheticSpec {
  Index n_genes = 300;
  Index n_experiments = 20;
  Index n_modules = 12;
  Index n_classes = 6;
  double noise = 0.3;
  std::uint64_t seed = 42;
};

std::pair<ExpressionMatrix, AnnotationMatrix> generate_synthetic(const SyntheticSpec& spec);

}  // namespace hyperprop
