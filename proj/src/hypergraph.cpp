#include "hyperprop/hypergraph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hyperprop {

Hypergraph::Hypergraph(Matrix incidence, Vector edge_weights)
    : incidence_(std::move(incidence)), weights_(std::move(edge_weights)) {
  const Index n = incidence_.rows();
  const Index m = incidence_.cols();
  if (n == 0 || m == 0) {
    throw std::invalid_argument("hypergraph: incidence matrix must be non-empty");
  }
  if (weights_.size() != m) {
    throw std::invalid_argument("hypergraph: expected " + std::to_string(m) +
                                " edge weights, got " + std::to_string(weights_.size()));
  }
  for (Index e = 0; e < m; ++e) {
    if (!(weights_(e) > 0.0)) {
      throw std::invalid_argument("hypergraph: edge " + std::to_string(e) +
                                  " has non-positive weight " + std::to_string(weights_(e)));
    }
  }
  for (Index v = 0; v < n; ++v) {
    for (Index e = 0; e < m; ++e) {
      const double x = incidence_(v, e);
      if (x != 0.0 && x != 1.0) {
        throw std::invalid_argument("hypergraph: incidence entry (" + std::to_string(v) +
                                    "," + std::to_string(e) + ") is not 0 or 1");
      }
    }
  }
  for (Index e = 0; e < m; ++e) {
    if (incidence_.col(e).sum() < 2.0) {
      throw std::invalid_argument("hypergraph: edge " + std::to_string(e) +
                                  " has cardinality < 2");
    }
  }
  for (Index v = 0; v < n; ++v) {
    if (incidence_.row(v).sum() < 1.0) {
      throw std::invalid_argument("hypergraph: vertex " + std::to_string(v) +
                                  " belongs to no hyperedge");
    }
  }
}

DegreeVectors compute_degrees(const Hypergraph& h) {
  DegreeVectors d;
  d.vertex = h.incidence() * h.edge_weights();
  d.edge = h.incidence().colwise().sum().transpose();
  // Positivity is guaranteed by the construction invariants; re-check so a
  // stale or hand-built instance cannot slip a singular D_v downstream.
  for (Index v = 0; v < d.vertex.size(); ++v) {
    if (!(d.vertex(v) > 0.0)) {
      throw std::invalid_argument("degrees: vertex " + std::to_string(v) +
                                  " has zero degree");
    }
  }
  for (Index e = 0; e < d.edge.size(); ++e) {
    if (!(d.edge(e) > 0.0)) {
      throw std::invalid_argument("degrees: edge " + std::to_string(e) + " is empty");
    }
  }
  return d;
}

void write_coordinate_list(const Hypergraph& h, std::ostream& out) {
  for (Index v = 0; v < h.n_vertices(); ++v) {
    for (Index e = 0; e < h.n_edges(); ++e) {
      if (h.incidence()(v, e) == 1.0) {
        out << v << '\t' << e << "\t1\n";
      }
    }
  }
}

Hypergraph read_coordinate_list(std::istream& in, Index n_vertices, Index n_edges) {
  return read_coordinate_list(in, n_vertices, n_edges, Vector::Ones(n_edges));
}

Hypergraph read_coordinate_list(std::istream& in, Index n_vertices, Index n_edges,
                                Vector edge_weights) {
  Matrix incidence = Matrix::Zero(n_vertices, n_edges);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    Index v = -1, e = -1;
    int one = 0;
    if (!(fields >> v >> e >> one) || one != 1) {
      throw std::invalid_argument("coordinate list: malformed line " +
                                  std::to_string(line_no) + ": '" + line + "'");
    }
    if (v < 0 || v >= n_vertices || e < 0 || e >= n_edges) {
      throw std::invalid_argument("coordinate list: index out of range on line " +
                                  std::to_string(line_no));
    }
    incidence(v, e) = 1.0;
  }
  return Hypergraph(std::move(incidence), std::move(edge_weights));
}

}  // namespace hyperprop
