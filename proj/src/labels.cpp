#include "hyperprop/labels.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hyperprop {

namespace {

void require_kind(const OperatorMatrix& op, OperatorKind a, OperatorKind b,
                  const std::string& where) {
  if (op.kind != a && op.kind != b) {
    throw std::invalid_argument(where + ": operator kind " + to_string(op.kind) +
                                " not accepted here");
  }
}

void require_kind(const OperatorMatrix& op, OperatorKind a, const std::string& where) {
  require_kind(op, a, a, where);
}

void require_alpha(double alpha) {
  if (!(alpha >= 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in [0,1) for the propagation solvers, got " +
                                std::to_string(alpha));
  }
}

void require_shapes(const OperatorMatrix& op, const LabelMatrix& y, const std::string& where) {
  if (y.values.rows() != op.size()) {
    throw std::invalid_argument(where + ": label matrix has " +
                                std::to_string(y.values.rows()) + " rows, operator is " +
                                std::to_string(op.size()) + "x" + std::to_string(op.size()));
  }
  if (y.values.cols() < 1) {
    throw std::invalid_argument(where + ": label matrix has no classes");
  }
}

// SPD solve A X = B with a residual guard. The systems here are
// I - alpha S_sym (eigenvalues >= 1 - alpha > 0) and L + gamma I
// (gamma > 0), so LLT cannot legitimately fail.
Matrix spd_solve(const Matrix& a, const Matrix& b, const std::string& where) {
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error(where + ": SPD factorization failed");
  }
  Matrix x = llt.solve(b);
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  const double residual = (a * x - b).cwiseAbs().maxCoeff();
  if (residual > 1e-8 * scale) {
    throw std::runtime_error(where + ": solve residual " + std::to_string(residual) +
                             " exceeds tolerance");
  }
  return x;
}

}  // namespace

void validate(const PropagationConfig& cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie strictly in (0,1), got " +
                                std::to_string(cfg.alpha));
  }
  if (!(cfg.gamma > 0.0)) {
    throw std::invalid_argument("gamma must be positive, got " + std::to_string(cfg.gamma));
  }
  if (!(cfg.tolerance > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  if (cfg.max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be positive");
  }
}

LabelMatrix build_initial_labels(const AnnotationMatrix& annotations,
                                 const std::vector<bool>& train_mask) {
  validate(annotations);
  const Index n = annotations.n_genes();
  if (static_cast<Index>(train_mask.size()) != n) {
    throw std::invalid_argument("build_initial_labels: mask length does not match genes");
  }
  Index n_train = 0;
  for (bool b : train_mask) n_train += b ? 1 : 0;
  if (n_train == 0) {
    throw std::invalid_argument("build_initial_labels: empty training set");
  }
  Matrix y = Matrix::Zero(n, annotations.n_classes());
  for (Index i = 0; i < n; ++i) {
    if (!train_mask[i]) continue;
    for (Index j = 0; j < annotations.n_classes(); ++j) {
      y(i, j) = annotations.values(i, j) == 1.0 ? 1.0 : -1.0;
    }
  }
  return {std::move(y), LabelRole::initial};
}

PropagationResult propagate_iterative(const OperatorMatrix& s, const LabelMatrix& y,
                                      const PropagationConfig& cfg) {
  require_kind(s, OperatorKind::random_walk_propagation, OperatorKind::symmetric_propagation,
               "propagate_iterative");
  require_shapes(s, y, "propagate_iterative");
  require_alpha(cfg.alpha);
  if (!(cfg.tolerance > 0.0) || cfg.max_iterations < 1) {
    throw std::invalid_argument("propagate_iterative: bad tolerance or iteration cap");
  }

  const Matrix anchor = (1.0 - cfg.alpha) * y.values;
  Matrix f = y.values;
  PropagationResult result;
  for (int t = 1; t <= cfg.max_iterations; ++t) {
    Matrix next = cfg.alpha * (s.values * f) + anchor;
    const double change = (next - f).cwiseAbs().maxCoeff();
    f = std::move(next);
    result.iterations = t;
    if (change < cfg.tolerance) {
      result.converged = true;
      break;
    }
  }
  result.labels = {std::move(f), LabelRole::estimate};
  return result;
}

LabelMatrix propagate_closed_form(const OperatorMatrix& s, const LabelMatrix& y,
                                  double alpha) {
  require_kind(s, OperatorKind::random_walk_propagation, OperatorKind::symmetric_propagation,
               "propagate_closed_form");
  require_shapes(s, y, "propagate_closed_form");
  require_alpha(alpha);
  const Index n = s.size();
  const Matrix identity = Matrix::Identity(n, n);

  if (s.kind == OperatorKind::symmetric_propagation) {
    Matrix f = spd_solve(identity - alpha * s.values, (1.0 - alpha) * y.values,
                         "propagate_closed_form[sym]");
    return {std::move(f), LabelRole::estimate};
  }

  // (I - a S_rw)^-1 = Dv^-1/2 (I - a S_sym)^-1 Dv^1/2 with
  // S_sym = Dv^1/2 S_rw Dv^-1/2; solve the SPD twin and map back.
  const Vector sqrt_deg = s.vertex_degrees.array().sqrt();
  const Vector inv_sqrt = s.vertex_degrees.array().rsqrt();
  Matrix s_sym = sqrt_deg.asDiagonal() * s.values * inv_sqrt.asDiagonal();
  s_sym = ((s_sym + s_sym.transpose()) / 2.0).eval();
  const Matrix rhs = (1.0 - alpha) * (sqrt_deg.asDiagonal() * y.values);
  Matrix g = spd_solve(identity - alpha * s_sym, rhs, "propagate_closed_form[rw]");
  Matrix f = inv_sqrt.asDiagonal() * g;

  const double scale = std::max(1.0, ((1.0 - alpha) * y.values).cwiseAbs().maxCoeff());
  const double residual =
      ((identity - alpha * s.values) * f - (1.0 - alpha) * y.values).cwiseAbs().maxCoeff();
  if (residual > 1e-8 * scale) {
    throw std::runtime_error("propagate_closed_form[rw]: residual " +
                             std::to_string(residual) + " exceeds tolerance");
  }
  return {std::move(f), LabelRole::estimate};
}

LabelMatrix solve_unnormalized(const OperatorMatrix& l, const LabelMatrix& y, double gamma) {
  require_kind(l, OperatorKind::unnormalized_laplacian, "solve_unnormalized");
  require_shapes(l, y, "solve_unnormalized");
  if (!(gamma > 0.0)) {
    throw std::invalid_argument("solve_unnormalized: gamma must be positive");
  }
  const Index n = l.size();
  Matrix f = spd_solve(l.values + gamma * Matrix::Identity(n, n), gamma * y.values,
                       "solve_unnormalized");
  return {std::move(f), LabelRole::estimate};
}

LabelMatrix solve_sym_regularized(const OperatorMatrix& lsym, const LabelMatrix& y,
                                  double gamma) {
  require_kind(lsym, OperatorKind::symmetric_laplacian, "solve_sym_regularized");
  require_shapes(lsym, y, "solve_sym_regularized");
  if (!(gamma > 0.0)) {
    throw std::invalid_argument("solve_sym_regularized: gamma must be positive");
  }
  const Index n = lsym.size();
  Matrix f = spd_solve(lsym.values + gamma * Matrix::Identity(n, n), gamma * y.values,
                       "solve_sym_regularized");
  return {std::move(f), LabelRole::estimate};
}

Eigen::MatrixXi predict(const LabelMatrix& f) {
  if (f.role != LabelRole::estimate) {
    throw std::invalid_argument("predict: expected an estimate label matrix");
  }
  Eigen::MatrixXi signs(f.values.rows(), f.values.cols());
  for (Index i = 0; i < f.values.rows(); ++i) {
    for (Index j = 0; j < f.values.cols(); ++j) {
      signs(i, j) = f.values(i, j) > 0.0 ? 1 : -1;
    }
  }
  return signs;
}

}  // namespace hyperprop
