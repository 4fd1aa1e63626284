#include "hyperprop/operators.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

namespace hyperprop {

namespace {

void check_degrees(const Hypergraph& h, const DegreeVectors& d) {
  if (d.vertex.size() != h.n_vertices() || d.edge.size() != h.n_edges()) {
    throw std::invalid_argument("operators: degree vectors do not match hypergraph shape");
  }
}

// H W De^-1 H^T, the smoothing kernel every operator is built from.
Matrix edge_averaging_kernel(const Hypergraph& h, const DegreeVectors& d) {
  const Matrix scaled =
      h.incidence() * (h.edge_weights().array() / d.edge.array()).matrix().asDiagonal();
  return scaled * h.incidence().transpose();
}

}  // namespace

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::unnormalized_laplacian: return "L";
    case OperatorKind::symmetric_laplacian: return "L_sym";
    case OperatorKind::random_walk_laplacian: return "L_rw";
    case OperatorKind::random_walk_propagation: return "S_rw";
    case OperatorKind::symmetric_propagation: return "S_sym";
  }
  return "?";
}

OperatorMatrix unnormalized_laplacian(const Hypergraph& h, const DegreeVectors& d) {
  check_degrees(h, d);
  Matrix values = Matrix(d.vertex.asDiagonal()) - edge_averaging_kernel(h, d);
  // The kernel product is symmetric in exact arithmetic; pin it down.
  values = ((values + values.transpose()) / 2.0).eval();
  return {OperatorKind::unnormalized_laplacian, std::move(values), d.vertex};
}

OperatorMatrix symmetric_laplacian(const Hypergraph& h, const DegreeVectors& d) {
  check_degrees(h, d);
  const Vector inv_sqrt = d.vertex.array().rsqrt();
  Matrix values = Matrix::Identity(h.n_vertices(), h.n_vertices()) -
                  inv_sqrt.asDiagonal() * edge_averaging_kernel(h, d) * inv_sqrt.asDiagonal();
  values = ((values + values.transpose()) / 2.0).eval();
  return {OperatorKind::symmetric_laplacian, std::move(values), d.vertex};
}

OperatorMatrix random_walk_laplacian(const Hypergraph& h, const DegreeVectors& d) {
  check_degrees(h, d);
  Matrix values = Matrix::Identity(h.n_vertices(), h.n_vertices()) -
                  d.vertex.cwiseInverse().asDiagonal() * edge_averaging_kernel(h, d);
  return {OperatorKind::random_walk_laplacian, std::move(values), d.vertex};
}

OperatorMatrix propagation_matrix(const Hypergraph& h, const DegreeVectors& d,
                                  PropagationKind kind) {
  check_degrees(h, d);
  if (kind == PropagationKind::random_walk) {
    Matrix values = d.vertex.cwiseInverse().asDiagonal() * edge_averaging_kernel(h, d);
    return {OperatorKind::random_walk_propagation, std::move(values), d.vertex};
  }
  const Vector inv_sqrt = d.vertex.array().rsqrt();
  Matrix values =
      inv_sqrt.asDiagonal() * edge_averaging_kernel(h, d) * inv_sqrt.asDiagonal();
  values = ((values + values.transpose()) / 2.0).eval();
  return {OperatorKind::symmetric_propagation, std::move(values), d.vertex};
}

double quadratic_form(const Hypergraph& h, const DegreeVectors& d, const Vector& f) {
  check_degrees(h, d);
  if (f.size() != h.n_vertices()) {
    throw std::invalid_argument("quadratic_form: vector length " + std::to_string(f.size()) +
                                " does not match " + std::to_string(h.n_vertices()) +
                                " vertices");
  }
  const Matrix& incidence = h.incidence();
  double total = 0.0;
  for (Index e = 0; e < h.n_edges(); ++e) {
    const double scale = h.edge_weights()(e) / d.edge(e);
    for (Index u = 0; u < h.n_vertices(); ++u) {
      if (incidence(u, e) != 1.0) continue;
      for (Index v = u + 1; v < h.n_vertices(); ++v) {
        if (incidence(v, e) != 1.0) continue;
        const double diff = f(u) - f(v);
        total += scale * diff * diff;
      }
    }
  }
  return total;
}

std::pair<double, double> spectrum_extremes(const OperatorMatrix& op) {
  Matrix symmetric_view = op.values;
  const bool random_walk_kind = op.kind == OperatorKind::random_walk_laplacian ||
                                op.kind == OperatorKind::random_walk_propagation;
  if (random_walk_kind) {
    // Dv^1/2 (Dv^-1 K) Dv^-1/2 is symmetric and shares the spectrum.
    const Vector sqrt_deg = op.vertex_degrees.array().sqrt();
    const Vector inv_sqrt = op.vertex_degrees.array().rsqrt();
    symmetric_view = sqrt_deg.asDiagonal() * op.values * inv_sqrt.asDiagonal();
    symmetric_view = ((symmetric_view + symmetric_view.transpose()) / 2.0).eval();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric_view, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("spectrum_extremes: eigensolver failed");
  }
  const Vector& ev = solver.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

}  // namespace hyperprop
