#include "hyperprop/synthetic.hpp"

#include <stdexcept>
#include <string>

#include "hyperprop/rng.hpp"

namespace hyperprop {

std::pair<ExpressionMatrix, AnnotationMatrix> generate_synthetic(const SyntheticSpec& spec) {
  if (spec.n_modules < 2) {
    throw std::invalid_argument("generate_synthetic: need at least 2 modules");
  }
  if (spec.n_genes < 2 * spec.n_modules) {
    throw std::invalid_argument("generate_synthetic: need at least 2 genes per module, got " +
                                std::to_string(spec.n_genes) + " genes for " +
                                std::to_string(spec.n_modules) + " modules");
  }
  if (spec.n_experiments < 2) {
    throw std::invalid_argument("generate_synthetic: need at least 2 experiments");
  }
  if (spec.n_classes < 1 || spec.n_classes > spec.n_modules) {
    throw std::invalid_argument("generate_synthetic: class count must lie in [1, n_modules]");
  }
  if (spec.noise < 0.0) {
    throw std::invalid_argument("generate_synthetic: noise must be non-negative");
  }

  Rng rng(spec.seed);

  Matrix module_profiles(spec.n_modules, spec.n_experiments);
  for (Index mod = 0; mod < spec.n_modules; ++mod) {
    for (Index t = 0; t < spec.n_experiments; ++t) {
      module_profiles(mod, t) = rng.normal();
    }
  }

  // Near-equal module sizes; the first n % modules take one extra gene.
  std::vector<Index> module_of(static_cast<std::size_t>(spec.n_genes));
  const Index base = spec.n_genes / spec.n_modules;
  const Index extra = spec.n_genes % spec.n_modules;
  Index gene = 0;
  for (Index mod = 0; mod < spec.n_modules; ++mod) {
    const Index size = base + (mod < extra ? 1 : 0);
    for (Index j = 0; j < size; ++j) module_of[static_cast<std::size_t>(gene++)] = mod;
  }

  ExpressionMatrix expression;
  expression.values.resize(spec.n_genes, spec.n_experiments);
  expression.gene_ids.reserve(static_cast<std::size_t>(spec.n_genes));
  for (Index i = 0; i < spec.n_genes; ++i) {
    expression.gene_ids.push_back("gene" + std::to_string(i));
    const Index mod = module_of[static_cast<std::size_t>(i)];
    for (Index t = 0; t < spec.n_experiments; ++t) {
      expression.values(i, t) = module_profiles(mod, t) + spec.noise * rng.normal();
    }
  }

  // Class j owns the modules congruent to j, so labels are constant
  // within each module.
  AnnotationMatrix annotations;
  annotations.values = Matrix::Zero(spec.n_genes, spec.n_classes);
  annotations.gene_ids = expression.gene_ids;
  annotations.class_ids.reserve(static_cast<std::size_t>(spec.n_classes));
  for (Index j = 0; j < spec.n_classes; ++j) {
    annotations.class_ids.push_back("class" + std::to_string(j));
  }
  for (Index i = 0; i < spec.n_genes; ++i) {
    const Index mod = module_of[static_cast<std::size_t>(i)];
    annotations.values(i, mod % spec.n_classes) = 1.0;
  }

  return {std::move(expression), std::move(annotations)};
}

}  // namespace hyperprop
