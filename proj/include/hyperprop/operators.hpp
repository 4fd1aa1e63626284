#pragma once

#include <string>

#include "hyperprop/hypergraph.hpp"

namespace hyperprop {

enum class OperatorKind {
  unnormalized_laplacian,   // L     = D_v - H W De^-1 H^T
  symmetric_laplacian,      // L_sym = I - Dv^-1/2 H W De^-1 H^T Dv^-1/2
  random_walk_laplacian,    // L_rw  = I - Dv^-1 H W De^-1 H^T
  random_walk_propagation,  // S_rw  = Dv^-1 H W De^-1 H^T
  symmetric_propagation,    // S_sym = Dv^-1/2 H W De^-1 H^T Dv^-1/2
};

enum class PropagationKind { random_walk, symmetric };

std::string to_string(OperatorKind kind);

/// An n-by-n operator built from a hypergraph (or graph), tagged with its
/// kind. vertex_degrees carries the D_v diagonal the operator was built
/// with; the random-walk solve path needs it to recover the symmetric
/// similarity transform.
struct OperatorMatrix {
  OperatorKind kind;
  Matrix values;
  Vector vertex_degrees;

  Index size() const { return values.rows(); }
};

OperatorMatrix unnormalized_laplacian(const Hypergraph& h, const DegreeVectors& d);
OperatorMatrix symmetric_laplacian(const Hypergraph& h, const DegreeVectors& d);
OperatorMatrix random_walk_laplacian(const Hypergraph& h, const DegreeVectors& d);
OperatorMatrix propagation_matrix(const Hypergraph& h, const DegreeVectors& d,
                                  PropagationKind kind);

/// f^T L f evaluated as the pairwise sum
///   sum_e sum_{u<v in e} w(e)/d(e) * (f(u) - f(v))^2
/// directly from the incidence matrix, never forming L. Serves as the
/// independent check of the matrix construction.
double quadratic_form(const Hypergraph& h, const DegreeVectors& d, const Vector& f);

/// Smallest and largest eigenvalue, for diagnostics on small operators.
/// Symmetric kinds use a dense self-adjoint solve; the random-walk kinds
/// share the symmetric spectrum through similarity.
std::pair<double, double> spectrum_extremes(const OperatorMatrix& op);

}  // namespace hyperprop
