#pragma once

#include <cstdint>
#include <vector>

#include "hyperprop/data.hpp"
#include "hyperprop/hypergraph.hpp"

namespace hyperprop {

/// Hard clustering of the genes. Every surviving cluster has at least two
/// members; singleton_repairs counts lone members that had to be merged
/// into their second-nearest cluster to get there.
struct ClusterAssignment {
  std::vector<int> labels;
  int k = 0;
  std::uint64_t seed = 0;
  int singleton_repairs = 0;
};

/// Per-row z-transform: subtract the row mean, divide by the population
/// standard deviation. Rows with zero variance come back all zero.
ExpressionMatrix zscore_rows(const ExpressionMatrix& x);

/// Cluster count rule round(sqrt(n/2)), half away from zero, floored at 2.
/// Requires n >= 4.
int cluster_count(Index n_points);

/// Seeded k-means (distance-weighted initialization, Lloyd iterations,
/// squared Euclidean metric). Deterministic for a fixed seed. Empty
/// clusters are re-seeded at the point farthest from its centroid during
/// the iteration; singleton clusters are merged away at termination.
ClusterAssignment kmeans(const ExpressionMatrix& x, int k, std::uint64_t seed);

/// One hyperedge per cluster, unit edge weights. Hard assignment means
/// each incidence row sums to 1, so every vertex degree is 1.
Hypergraph incidence_from_clusters(const ClusterAssignment& assignment);

}  // namespace hyperprop
