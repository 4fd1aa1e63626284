#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

namespace hyperprop {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Hypergraph represented by its vertex-by-edge incidence matrix plus
/// positive hyperedge weights.
///
/// Construction validates:
///   - every incidence entry is exactly 0 or 1,
///   - every hyperedge covers at least two vertices,
///   - every vertex lies in at least one hyperedge (so the vertex-degree
///     matrix is invertible),
///   - every edge weight is strictly positive.
/// Instances are immutable after construction and safe to share across
/// threads for reading.
class Hypergraph {
 public:
  Hypergraph(Matrix incidence, Vector edge_weights);

  Index n_vertices() const { return incidence_.rows(); }
  Index n_edges() const { return incidence_.cols(); }
  const Matrix& incidence() const { return incidence_; }
  const Vector& edge_weights() const { return weights_; }

 private:
  Matrix incidence_;
  Vector weights_;
};

/// Weighted vertex degrees d(v) = sum_e w(e) h(v,e) and edge degrees
/// d(e) = sum_v h(v,e).
struct DegreeVectors {
  Vector vertex;
  Vector edge;
};

DegreeVectors compute_degrees(const Hypergraph& h);

/// Writes one "vertex_index<TAB>edge_index<TAB>1" line per incidence,
/// row-major. Used for test fixtures and the CLI build artifacts.
void write_coordinate_list(const Hypergraph& h, std::ostream& out);

/// Parses the coordinate-list format back into an incidence matrix.
/// Edge weights are all one unless given.
Hypergraph read_coordinate_list(std::istream& in, Index n_vertices, Index n_edges);
Hypergraph read_coordinate_list(std::istream& in, Index n_vertices, Index n_edges,
                                Vector edge_weights);

}  // namespace hyperprop
