#include "hyperprop/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "hyperprop/builder.hpp"
#include "hyperprop/coexpression.hpp"
#include "hyperprop/rng.hpp"

namespace hyperprop {

std::string to_string(Method method) {
  switch (method) {
    case Method::graph_unnormalized: return "graph-unnormalized";
    case Method::hypergraph_unnormalized: return "hypergraph-unnormalized";
    case Method::hypergraph_random_walk: return "hypergraph-random-walk";
    case Method::hypergraph_symmetric: return "hypergraph-symmetric";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "graph" || name == "graph-unnormalized") return Method::graph_unnormalized;
  if (name == "hypergraph-unnormalized" || name == "hg-unnorm")
    return Method::hypergraph_unnormalized;
  if (name == "hypergraph-random-walk" || name == "hg-rw")
    return Method::hypergraph_random_walk;
  if (name == "hypergraph-symmetric" || name == "hg-sym") return Method::hypergraph_symmetric;
  throw std::invalid_argument("unknown method '" + name +
                              "' (expected graph-unnormalized, hypergraph-unnormalized, "
                              "hypergraph-random-walk or hypergraph-symmetric)");
}

std::vector<Method> all_methods() {
  return {Method::graph_unnormalized, Method::hypergraph_unnormalized,
          Method::hypergraph_random_walk, Method::hypergraph_symmetric};
}

FoldPlan kfold_split(Index n, int k, std::uint64_t seed) {
  if (k < 2) {
    throw std::invalid_argument("kfold_split: need at least 2 folds");
  }
  if (n < static_cast<Index>(k)) {
    throw std::invalid_argument("kfold_split: k = " + std::to_string(k) +
                                " exceeds n = " + std::to_string(n));
  }
  std::vector<Index> order(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  Rng rng(seed);
  rng.shuffle(order);

  FoldPlan plan{k, std::vector<int>(static_cast<std::size_t>(n), 0), seed};
  // First n % k folds take one extra element.
  const Index base = n / k;
  const Index extra = n % k;
  Index pos = 0;
  for (int fold = 0; fold < k; ++fold) {
    const Index size = base + (fold < extra ? 1 : 0);
    for (Index j = 0; j < size; ++j) {
      plan.assignments[static_cast<std::size_t>(order[static_cast<std::size_t>(pos++)])] = fold;
    }
  }
  return plan;
}

double accuracy(const Eigen::VectorXi& predicted, const Vector& truth) {
  if (predicted.size() == 0 || predicted.size() != truth.size()) {
    throw std::invalid_argument("accuracy: vectors must be non-empty and of equal length");
  }
  Index matches = 0;
  for (Index i = 0; i < predicted.size(); ++i) {
    if (truth(i) != 0.0 && truth(i) != 1.0) {
      throw std::invalid_argument("accuracy: truth entries must be 0 or 1");
    }
    const int truth_sign = truth(i) == 1.0 ? 1 : -1;
    if (predicted(i) == truth_sign) ++matches;
  }
  return static_cast<double>(matches) / static_cast<double>(predicted.size());
}

namespace {

std::vector<Method> canonical_methods(const std::vector<Method>& requested) {
  std::vector<Method> ordered;
  for (Method m : all_methods()) {
    if (std::find(requested.begin(), requested.end(), m) != requested.end()) {
      ordered.push_back(m);
    }
  }
  return ordered;
}

bool uses_hypergraph(const std::vector<Method>& methods) {
  return std::any_of(methods.begin(), methods.end(),
                     [](Method m) { return m != Method::graph_unnormalized; });
}

LabelMatrix solve_method(Method method, const std::map<Method, OperatorMatrix>& operators,
                         const LabelMatrix& y, const PropagationConfig& params) {
  const OperatorMatrix& op = operators.at(method);
  switch (method) {
    case Method::graph_unnormalized:
    case Method::hypergraph_unnormalized:
      return solve_unnormalized(op, y, params.gamma);
    case Method::hypergraph_random_walk:
    case Method::hypergraph_symmetric:
      return propagate_closed_form(op, y, params.alpha);
  }
  throw std::logic_error("solve_method: unreachable");
}

}  // namespace

ExperimentReport run_experiment(const ExpressionMatrix& x, const AnnotationMatrix& ann,
                                const std::vector<Method>& methods,
                                const PropagationConfig& params, const FoldPlan& folds,
                                const ExperimentOptions& options) {
  validate(x);
  validate(ann);
  validate(params);
  if (ann.n_genes() != x.n_genes() || ann.gene_ids != x.gene_ids) {
    throw std::invalid_argument("run_experiment: annotation genes do not match expression genes");
  }
  if (static_cast<Index>(folds.assignments.size()) != x.n_genes() || folds.k_folds < 2) {
    throw std::invalid_argument("run_experiment: fold plan does not match the dataset");
  }

  ExperimentReport report;
  report.n_genes = x.n_genes();
  report.n_experiments = x.n_experiments();
  report.n_classes = ann.n_classes();
  report.params = params;
  report.threshold = options.threshold;
  report.cluster_seed = options.cluster_seed;
  report.fold_seed = folds.seed;
  report.k_folds = folds.k_folds;
  report.class_ids = ann.class_ids;
  report.class_evaluable = evaluable_classes(ann);

  const std::vector<Method> ordered = canonical_methods(methods);
  if (ordered.empty()) {
    return report;
  }

  // Hyperedges and the co-expression graph come from expression data alone,
  // so they are built once and shared across folds; only Y changes per fold.
  const ExpressionMatrix z = zscore_rows(x);
  std::map<Method, OperatorMatrix> operators;
  if (uses_hypergraph(ordered)) {
    const int k = cluster_count(z.n_genes());
    const ClusterAssignment assignment = kmeans(z, k, options.cluster_seed);
    report.n_hyperedges = assignment.k;
    report.singleton_repairs = assignment.singleton_repairs;
    const Hypergraph hg = incidence_from_clusters(assignment);
    const DegreeVectors d = compute_degrees(hg);
    for (Method m : ordered) {
      if (m == Method::hypergraph_unnormalized) {
        operators.emplace(m, unnormalized_laplacian(hg, d));
      } else if (m == Method::hypergraph_random_walk) {
        operators.emplace(m, propagation_matrix(hg, d, PropagationKind::random_walk));
      } else if (m == Method::hypergraph_symmetric) {
        operators.emplace(m, propagation_matrix(hg, d, PropagationKind::symmetric));
      }
    }
  }
  if (std::find(ordered.begin(), ordered.end(), Method::graph_unnormalized) != ordered.end()) {
    const SimilarityMatrix similarity = coexpression_similarity(z);
    const AdjacencyMatrix adjacency = threshold_adjacency(similarity, options.threshold);
    operators.emplace(Method::graph_unnormalized, graph_laplacian(adjacency));
  }

  const Index n = x.n_genes();
  const Index c = ann.n_classes();
  const int k_folds = folds.k_folds;

  for (Method m : ordered) {
    MethodResult result;
    result.method = m;
    result.q.assign(static_cast<std::size_t>(c), {});
    for (Index j = 0; j < c; ++j) {
      if (report.class_evaluable[static_cast<std::size_t>(j)]) {
        result.q[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(k_folds),
                                                     std::numeric_limits<double>::quiet_NaN());
      }
    }
    result.class_mean.assign(static_cast<std::size_t>(c), std::nullopt);
    result.fold_converged.assign(static_cast<std::size_t>(k_folds), false);
    report.results.push_back(std::move(result));
  }

  // predictions[method][fold] on held-out rows, kept for agreement rates.
  std::vector<std::vector<Eigen::MatrixXi>> fold_predictions(
      ordered.size(), std::vector<Eigen::MatrixXi>(static_cast<std::size_t>(k_folds)));
  std::vector<std::vector<Index>> heldout_per_fold(static_cast<std::size_t>(k_folds));
  for (Index i = 0; i < n; ++i) {
    heldout_per_fold[static_cast<std::size_t>(folds.assignments[static_cast<std::size_t>(i)])]
        .push_back(i);
  }

  for (int fold = 0; fold < k_folds; ++fold) {
    std::vector<bool> train_mask(static_cast<std::size_t>(n), true);
    for (Index i : heldout_per_fold[static_cast<std::size_t>(fold)]) {
      train_mask[static_cast<std::size_t>(i)] = false;
    }
    const LabelMatrix y = build_initial_labels(ann, train_mask);
    const std::vector<Index>& heldout = heldout_per_fold[static_cast<std::size_t>(fold)];

    for (std::size_t mi = 0; mi < ordered.size(); ++mi) {
      MethodResult& result = report.results[mi];
      Eigen::MatrixXi predictions;
      try {
        const LabelMatrix f = solve_method(ordered[mi], operators, y, params);
        predictions = predict(f);
        result.fold_converged[static_cast<std::size_t>(fold)] = true;
      } catch (const std::runtime_error&) {
        // Leave the fold flagged unconverged; its Q entries stay NaN.
        continue;
      }

      Eigen::MatrixXi heldout_pred(static_cast<Index>(heldout.size()), c);
      for (Index r = 0; r < static_cast<Index>(heldout.size()); ++r) {
        heldout_pred.row(r) = predictions.row(heldout[static_cast<std::size_t>(r)]);
      }
      fold_predictions[mi][static_cast<std::size_t>(fold)] = heldout_pred;

      for (Index j = 0; j < c; ++j) {
        if (!report.class_evaluable[static_cast<std::size_t>(j)]) continue;
        Vector truth(static_cast<Index>(heldout.size()));
        for (Index r = 0; r < static_cast<Index>(heldout.size()); ++r) {
          truth(r) = ann.values(heldout[static_cast<std::size_t>(r)], j);
        }
        result.q[static_cast<std::size_t>(j)][static_cast<std::size_t>(fold)] =
            accuracy(heldout_pred.col(j), truth);
      }
    }
  }

  // Aggregate: mean over converged folds per class, then mean over classes.
  for (MethodResult& result : report.results) {
    double class_sum = 0.0;
    Index evaluable = 0;
    for (Index j = 0; j < c; ++j) {
      if (!report.class_evaluable[static_cast<std::size_t>(j)]) continue;
      double fold_sum = 0.0;
      int fold_count = 0;
      for (double q : result.q[static_cast<std::size_t>(j)]) {
        if (!std::isnan(q)) {
          fold_sum += q;
          ++fold_count;
        }
      }
      if (fold_count > 0) {
        result.class_mean[static_cast<std::size_t>(j)] = fold_sum / fold_count;
        class_sum += *result.class_mean[static_cast<std::size_t>(j)];
        ++evaluable;
      }
    }
    result.average_q = evaluable > 0 ? class_sum / static_cast<double>(evaluable)
                                     : std::numeric_limits<double>::quiet_NaN();
  }

  // Observational: how often do two methods predict the same sign on the
  // held-out cells of evaluable classes.
  for (std::size_t a = 0; a < ordered.size(); ++a) {
    for (std::size_t b = a + 1; b < ordered.size(); ++b) {
      long long agree = 0;
      long long total = 0;
      for (int fold = 0; fold < k_folds; ++fold) {
        const Eigen::MatrixXi& pa = fold_predictions[a][static_cast<std::size_t>(fold)];
        const Eigen::MatrixXi& pb = fold_predictions[b][static_cast<std::size_t>(fold)];
        if (pa.size() == 0 || pb.size() == 0) continue;
        for (Index r = 0; r < pa.rows(); ++r) {
          for (Index j = 0; j < c; ++j) {
            if (!report.class_evaluable[static_cast<std::size_t>(j)]) continue;
            ++total;
            if (pa(r, j) == pb(r, j)) ++agree;
          }
        }
      }
      if (total > 0) {
        report.agreements.push_back(
            {ordered[a], ordered[b], static_cast<double>(agree) / static_cast<double>(total)});
      }
    }
  }

  check_report_consistency(report);
  return report;
}

void check_report_consistency(const ExperimentReport& report) {
  for (const MethodResult& result : report.results) {
    double class_sum = 0.0;
    Index evaluable = 0;
    for (Index j = 0; j < report.n_classes; ++j) {
      const auto& fold_qs = result.q[static_cast<std::size_t>(j)];
      if (!report.class_evaluable[static_cast<std::size_t>(j)]) {
        if (!fold_qs.empty()) {
          throw std::logic_error("report: excluded class carries Q values");
        }
        continue;
      }
      double fold_sum = 0.0;
      int fold_count = 0;
      for (double q : fold_qs) {
        if (std::isnan(q)) continue;
        if (q < 0.0 || q > 1.0) {
          throw std::logic_error("report: Q outside [0,1]");
        }
        fold_sum += q;
        ++fold_count;
      }
      const auto& mean = result.class_mean[static_cast<std::size_t>(j)];
      if (fold_count == 0) {
        if (mean.has_value()) {
          throw std::logic_error("report: class mean present without fold values");
        }
        continue;
      }
      if (!mean.has_value() || std::abs(*mean - fold_sum / fold_count) > 1e-12) {
        throw std::logic_error("report: class mean does not match fold values");
      }
      class_sum += *mean;
      ++evaluable;
    }
    if (evaluable > 0 &&
        std::abs(result.average_q - class_sum / static_cast<double>(evaluable)) > 1e-12) {
      throw std::logic_error("report: method average does not match class means");
    }
  }
}

}  // namespace hyperprop
