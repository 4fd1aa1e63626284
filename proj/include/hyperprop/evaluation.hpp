#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperprop/data.hpp"
#include "hyperprop/labels.hpp"

namespace hyperprop {

enum class Method {
  graph_unnormalized,
  hypergraph_unnormalized,
  hypergraph_random_walk,
  hypergraph_symmetric,
};

std::string to_string(Method method);
Method parse_method(const std::string& name);
std::vector<Method> all_methods();

/// Seeded partition of n points into k near-equal folds.
struct FoldPlan {
  int k_folds = 0;
  std::vector<int> assignments;
  std::uint64_t seed = 0;
};

FoldPlan kfold_split(Index n, int k, std::uint64_t seed);

/// Fraction of positions where the sign prediction matches the binary
/// truth (with 0 read as -1): (TP + TN) / (TP + TN + FP + FN).
double accuracy(const Eigen::VectorXi& predicted, const Vector& truth);

struct MethodResult {
  Method method = Method::graph_unnormalized;
  /// q[class][fold]; NaN marks a fold whose solve failed, and excluded
  /// classes have empty rows.
  std::vector<std::vector<double>> q;
  /// Mean over converged folds, per class; unset for excluded classes.
  std::vector<std::optional<double>> class_mean;
  /// Mean of class_mean over evaluable classes.
  double average_q = 0.0;
  std::vector<bool> fold_converged;
};

struct PairwiseAgreement {
  Method first;
  Method second;
  double rate = 0.0;
};

struct ExperimentReport {
  int schema_version = 1;
  Index n_genes = 0;
  Index n_experiments = 0;
  Index n_classes = 0;
  PropagationConfig params;
  double threshold = 0.5;
  std::uint64_t cluster_seed = 0;
  std::uint64_t fold_seed = 0;
  int k_folds = 0;
  int n_hyperedges = 0;
  int singleton_repairs = 0;
  std::vector<std::string> class_ids;
  std::vector<bool> class_evaluable;
  std::vector<MethodResult> results;
  std::vector<PairwiseAgreement> agreements;
};

struct ExperimentOptions {
  double threshold = 0.5;
  std::uint64_t cluster_seed = 0;
};

/// Runs the full pipeline: one label-free hypergraph (and/or co-expression
/// graph) built from all genes, then per fold a fresh initial label matrix
/// and one multi-class solve per requested method. Q is scored on held-out
/// rows only. Solver failures mark the fold, they do not abort the run.
ExperimentReport run_experiment(const ExpressionMatrix& x, const AnnotationMatrix& ann,
                                const std::vector<Method>& methods,
                                const PropagationConfig& params, const FoldPlan& folds,
                                const ExperimentOptions& options);

/// Recomputes every aggregate from the stored per-fold values and throws
/// if anything is off by more than 1e-12 or out of [0,1].
void check_report_consistency(const ExperimentReport& report);

}  // namespace hyperprop
