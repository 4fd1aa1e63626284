#include "hyperprop/builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hyperprop/rng.hpp"

namespace hyperprop {

namespace {

constexpr double kCentroidMoveTol = 1e-6;
constexpr int kMaxLloydIterations = 100;

double squared_distance(const Matrix& x, Index row, const Matrix& centroids, Index c) {
  return (x.row(row) - centroids.row(c)).squaredNorm();
}

Index nearest_centroid(const Matrix& x, Index row, const Matrix& centroids) {
  Index best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (Index c = 0; c < centroids.rows(); ++c) {
    const double d = squared_distance(x, row, centroids, c);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

// Distance-weighted seeding: first centroid uniform, each further one
// drawn with probability proportional to the squared distance from the
// centroids chosen so far.
Matrix seed_centroids(const Matrix& x, int k, Rng& rng) {
  const Index n = x.rows();
  Matrix centroids(k, x.cols());
  centroids.row(0) = x.row(static_cast<Index>(rng.index(static_cast<std::size_t>(n))));
  Vector d2 = Vector::Constant(n, std::numeric_limits<double>::infinity());
  for (int c = 1; c < k; ++c) {
    for (Index i = 0; i < n; ++i) {
      d2(i) = std::min(d2(i), squared_distance(x, i, centroids, c - 1));
    }
    const double total = d2.sum();
    Index pick;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double cumulative = 0.0;
      pick = n - 1;
      for (Index i = 0; i < n; ++i) {
        cumulative += d2(i);
        if (cumulative >= target) {
          pick = i;
          break;
        }
      }
    } else {
      // All remaining points coincide with a centroid already.
      pick = static_cast<Index>(rng.index(static_cast<std::size_t>(n)));
    }
    centroids.row(c) = x.row(pick);
  }
  return centroids;
}

double assignment_objective(const Matrix& x, const std::vector<int>& labels,
                            const Matrix& centroids) {
  double total = 0.0;
  for (Index i = 0; i < x.rows(); ++i) {
    total += squared_distance(x, i, centroids, labels[static_cast<std::size_t>(i)]);
  }
  return total;
}

}  // namespace

ExpressionMatrix zscore_rows(const ExpressionMatrix& x) {
  validate(x);
  const Index m = x.n_experiments();
  ExpressionMatrix out{Matrix(x.values.rows(), m), x.gene_ids};
  for (Index i = 0; i < x.values.rows(); ++i) {
    const double mean = x.values.row(i).mean();
    const Eigen::RowVectorXd centered = x.values.row(i).array() - mean;
    const double std_dev = std::sqrt(centered.squaredNorm() / static_cast<double>(m));
    // Constant rows carry no signal; roundoff in the mean must not turn
    // them into spurious +-1 patterns.
    if (std_dev <= 1e-12 * std::max(1.0, std::abs(mean))) {
      out.values.row(i).setZero();
    } else {
      out.values.row(i) = centered / std_dev;
    }
  }
  return out;
}

int cluster_count(Index n_points) {
  if (n_points < 4) {
    throw std::invalid_argument("cluster_count: need at least 4 points, got " +
                                std::to_string(n_points));
  }
  const double raw = std::sqrt(static_cast<double>(n_points) / 2.0);
  return std::max(2, static_cast<int>(std::llround(raw)));
}

ClusterAssignment kmeans(const ExpressionMatrix& x, int k, std::uint64_t seed) {
  validate(x);
  const Index n = x.n_genes();
  if (k < 2) {
    throw std::invalid_argument("kmeans: k must be at least 2");
  }
  if (static_cast<Index>(k) * 2 > n) {
    throw std::invalid_argument("kmeans: k = " + std::to_string(k) +
                                " leaves no room for clusters of size 2 with n = " +
                                std::to_string(n));
  }

  Rng rng(seed);
  Matrix centroids = seed_centroids(x.values, k, rng);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    labels[static_cast<std::size_t>(i)] = static_cast<int>(nearest_centroid(x.values, i, centroids));
  }
  double objective = assignment_objective(x.values, labels, centroids);

  for (int iteration = 0; iteration < kMaxLloydIterations; ++iteration) {
    // Update step: means of the current members.
    Matrix next_centroids = Matrix::Zero(k, x.values.cols());
    std::vector<Index> counts(static_cast<std::size_t>(k), 0);
    for (Index i = 0; i < n; ++i) {
      next_centroids.row(labels[static_cast<std::size_t>(i)]) += x.values.row(i);
      ++counts[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
    }
    std::vector<bool> reseeded(static_cast<std::size_t>(n), false);
    for (int c = 0; c < k; ++c) {
      if (counts[static_cast<std::size_t>(c)] > 0) {
        next_centroids.row(c) /= static_cast<double>(counts[static_cast<std::size_t>(c)]);
      } else {
        // Re-seed an empty cluster at the point currently worst served.
        Index worst = 0;
        double worst_d = -1.0;
        for (Index i = 0; i < n; ++i) {
          if (reseeded[static_cast<std::size_t>(i)]) continue;
          const double d =
              squared_distance(x.values, i, centroids, labels[static_cast<std::size_t>(i)]);
          if (d > worst_d) {
            worst_d = d;
            worst = i;
          }
        }
        next_centroids.row(c) = x.values.row(worst);
        reseeded[static_cast<std::size_t>(worst)] = true;
      }
    }

    double movement = 0.0;
    for (int c = 0; c < k; ++c) {
      const double moved = (next_centroids.row(c) - centroids.row(c)).norm() /
                           (1.0 + centroids.row(c).norm());
      movement = std::max(movement, moved);
    }
    centroids = std::move(next_centroids);

    // Assignment step.
    for (Index i = 0; i < n; ++i) {
      labels[static_cast<std::size_t>(i)] = static_cast<int>(nearest_centroid(x.values, i, centroids));
    }
    const double next_objective = assignment_objective(x.values, labels, centroids);
    if (next_objective > objective * (1.0 + 1e-12) + 1e-12) {
      throw std::logic_error("kmeans: objective increased across a Lloyd iteration");
    }
    objective = next_objective;
    if (movement < kCentroidMoveTol) break;
  }

  ClusterAssignment assignment{std::move(labels), k, seed, 0};

  // Merge away singleton clusters: the lone member joins its second-nearest
  // centroid's cluster and the emptied cluster index is compacted out.
  for (;;) {
    std::vector<Index> counts(static_cast<std::size_t>(assignment.k), 0);
    for (int label : assignment.labels) ++counts[static_cast<std::size_t>(label)];
    int singleton = -1;
    for (int c = 0; c < assignment.k; ++c) {
      if (counts[static_cast<std::size_t>(c)] == 1) {
        singleton = c;
        break;
      }
    }
    if (singleton < 0) break;
    if (assignment.k <= 1) {
      throw std::runtime_error("kmeans: could not form clusters of size >= 2");
    }

    Index member = -1;
    for (Index i = 0; i < n; ++i) {
      if (assignment.labels[static_cast<std::size_t>(i)] == singleton) {
        member = i;
        break;
      }
    }
    int target = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int c = 0; c < assignment.k; ++c) {
      if (c == singleton) continue;
      const double d = squared_distance(x.values, member, centroids, c);
      if (d < best_d) {
        best_d = d;
        target = c;
      }
    }
    assignment.labels[static_cast<std::size_t>(member)] = target;

    // Drop the emptied cluster and shift the higher indices down.
    for (int& label : assignment.labels) {
      if (label > singleton) --label;
    }
    const Index rows_after = centroids.rows() - 1;
    Matrix compacted(rows_after, centroids.cols());
    compacted.topRows(singleton) = centroids.topRows(singleton);
    compacted.bottomRows(rows_after - singleton) = centroids.bottomRows(rows_after - singleton);
    centroids = std::move(compacted);
    --assignment.k;
    ++assignment.singleton_repairs;
  }

  return assignment;
}

Hypergraph incidence_from_clusters(const ClusterAssignment& assignment) {
  const Index n = static_cast<Index>(assignment.labels.size());
  if (n == 0 || assignment.k < 1) {
    throw std::invalid_argument("incidence_from_clusters: empty assignment");
  }
  Matrix incidence = Matrix::Zero(n, assignment.k);
  for (Index i = 0; i < n; ++i) {
    const int label = assignment.labels[static_cast<std::size_t>(i)];
    if (label < 0 || label >= assignment.k) {
      throw std::invalid_argument("incidence_from_clusters: label out of range at row " +
                                  std::to_string(i));
    }
    incidence(i, label) = 1.0;
  }
  return Hypergraph(std::move(incidence), Vector::Ones(assignment.k));
}

}  // namespace hyperprop
