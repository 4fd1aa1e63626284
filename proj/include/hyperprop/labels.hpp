#pragma once

#include <vector>

#include "hyperprop/data.hpp"
#include "hyperprop/operators.hpp"

namespace hyperprop {

enum class LabelRole { initial, estimate };

/// n-by-c label matrix. With role initial, entries are +1 (annotated
/// member), -1 (annotated non-member), or 0 (unlabeled row); with role
/// estimate, entries are the real-valued propagation output.
struct LabelMatrix {
  Matrix values;
  LabelRole role = LabelRole::initial;

  Index n_points() const { return values.rows(); }
  Index n_classes() const { return values.cols(); }
};

/// Parameters of the propagation and regularization solvers. alpha is the
/// iteration mixing weight, gamma the fidelity weight; the two views of
/// the symmetric method coincide when alpha = 1/(1+gamma).
struct PropagationConfig {
  double alpha = 0.85;
  double gamma = 1.0;
  double tolerance = 1e-6;
  int max_iterations = 1000;
};

/// Throws unless 0 < alpha < 1, gamma > 0, tolerance > 0 and
/// max_iterations > 0. Run configurations go through this; the individual
/// solvers additionally accept the degenerate alpha = 0.
void validate(const PropagationConfig& cfg);

struct PropagationResult {
  LabelMatrix labels;
  int iterations = 0;
  bool converged = false;
};

/// Builds the initial label matrix: training rows carry +1/-1 copied from
/// the binary annotations, all other rows are zero.
LabelMatrix build_initial_labels(const AnnotationMatrix& annotations,
                                 const std::vector<bool>& train_mask);

/// F <- alpha S F + (1-alpha) Y from F = Y until the max-abs update drops
/// below cfg.tolerance or cfg.max_iterations is reached.
PropagationResult propagate_iterative(const OperatorMatrix& s, const LabelMatrix& y,
                                      const PropagationConfig& cfg);

/// Fixed point (I - alpha S)^-1 (1-alpha) Y of the iteration above. The
/// symmetric kind is an SPD solve; the random-walk kind reuses it through
/// the degree similarity transform.
LabelMatrix propagate_closed_form(const OperatorMatrix& s, const LabelMatrix& y,
                                  double alpha);

/// F* = gamma (L + gamma I)^-1 Y for the un-normalized Laplacian (hypergraph
/// or graph); stationary point of the smoothness-plus-fidelity objective.
LabelMatrix solve_unnormalized(const OperatorMatrix& l, const LabelMatrix& y, double gamma);

/// F* = gamma (L_sym + gamma I)^-1 Y.
LabelMatrix solve_sym_regularized(const OperatorMatrix& lsym, const LabelMatrix& y,
                                  double gamma);

/// Entrywise sign of an estimate, with sign(0) mapped to -1.
Eigen::MatrixXi predict(const LabelMatrix& f);

}  // namespace hyperprop
