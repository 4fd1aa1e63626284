#include <doctest.h>

#include <cmath>
#include <set>

#include "hyperprop/builder.hpp"
#include "hyperprop/operators.hpp"
#include "hyperprop/rng.hpp"

using namespace hyperprop;

namespace {

ExpressionMatrix make_expression(Matrix values) {
  ExpressionMatrix x;
  x.values = std::move(values);
  for (Index i = 0; i < x.values.rows(); ++i) {
    x.gene_ids.push_back("g" + std::to_string(i));
  }
  return x;
}

// Two tight blobs of points around the given centers.
ExpressionMatrix two_blobs(Index per_blob, double spread, std::uint64_t seed) {
  Rng rng(seed);
  Matrix values(2 * per_blob, 3);
  for (Index i = 0; i < per_blob; ++i) {
    for (Index j = 0; j < 3; ++j) {
      values(i, j) = spread * rng.normal();
      values(per_blob + i, j) = 100.0 + spread * rng.normal();
    }
  }
  return make_expression(std::move(values));
}

}  // namespace

TEST_CASE("z-score of a simple row") {
  ExpressionMatrix x = make_expression((Matrix(1, 3) << 1, 2, 3).finished());
  const ExpressionMatrix z = zscore_rows(x);
  const double expected = std::sqrt(1.5);
  CHECK(z.values(0, 0) == doctest::Approx(-expected));
  CHECK(z.values(0, 1) == doctest::Approx(0.0));
  CHECK(z.values(0, 2) == doctest::Approx(expected));
}

TEST_CASE("constant rows become zero") {
  ExpressionMatrix x = make_expression((Matrix(2, 3) << 5, 5, 5, 0.1, 0.1, 0.1).finished());
  const ExpressionMatrix z = zscore_rows(x);
  CHECK(z.values.row(0).cwiseAbs().maxCoeff() == 0.0);
  // Roundoff in the mean of 0.1s must not produce a fake pattern.
  CHECK(z.values.row(1).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("z-score normalizes mean and deviation, idempotently") {
  Rng rng(7);
  Matrix values(6, 9);
  for (Index i = 0; i < values.rows(); ++i) {
    for (Index j = 0; j < values.cols(); ++j) values(i, j) = rng.uniform(-5.0, 5.0);
  }
  const ExpressionMatrix z = zscore_rows(make_expression(values));
  const double m = static_cast<double>(z.values.cols());
  for (Index i = 0; i < z.values.rows(); ++i) {
    CHECK(std::abs(z.values.row(i).mean()) <= 1e-12);
    CHECK(std::abs(z.values.row(i).squaredNorm() / m - 1.0) <= 1e-10);
  }
  const ExpressionMatrix zz = zscore_rows(z);
  CHECK((zz.values - z.values).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("cluster count rule") {
  CHECK(cluster_count(4062) == 45);
  CHECK(cluster_count(8) == 2);
  CHECK(cluster_count(200) == 10);
  CHECK(cluster_count(4) == 2);
  CHECK_THROWS_AS(cluster_count(3), std::invalid_argument);
}

TEST_CASE("k-means recovers two planted groups") {
  const ExpressionMatrix x = two_blobs(10, 0.5, 11);
  const ClusterAssignment assignment = kmeans(x, 2, 5);
  REQUIRE(assignment.k == 2);
  const int first = assignment.labels[0];
  for (Index i = 0; i < 10; ++i) CHECK(assignment.labels[static_cast<std::size_t>(i)] == first);
  for (Index i = 10; i < 20; ++i) CHECK(assignment.labels[static_cast<std::size_t>(i)] == 1 - first);
  CHECK(assignment.singleton_repairs == 0);
}

TEST_CASE("k-means is deterministic per seed") {
  const ExpressionMatrix x = two_blobs(12, 2.0, 3);
  const ClusterAssignment a = kmeans(x, 4, 99);
  const ClusterAssignment b = kmeans(x, 4, 99);
  CHECK(a.labels == b.labels);
  CHECK(a.k == b.k);
}

TEST_CASE("k-means separates planted pairs at k = n/2") {
  // 4 pairs far apart; every pair must become its own cluster.
  Matrix values(8, 2);
  values << 0, 0,   0.1, 0,
            50, 0,  50.1, 0,
            0, 50,  0.1, 50,
            50, 50, 50.1, 50;
  const ExpressionMatrix x = make_expression(std::move(values));
  const ClusterAssignment assignment = kmeans(x, 4, 17);
  REQUIRE(assignment.k == 4);
  std::set<int> seen;
  for (int i = 0; i < 8; i += 2) {
    CHECK(assignment.labels[static_cast<std::size_t>(i)] ==
          assignment.labels[static_cast<std::size_t>(i + 1)]);
    seen.insert(assignment.labels[static_cast<std::size_t>(i)]);
  }
  CHECK(seen.size() == 4);
}

TEST_CASE("singleton clusters are merged away") {
  // Five near-coincident points plus one far outlier: the outlier ends up
  // alone in its cluster and must be folded back in.
  Matrix values(6, 2);
  values << 0, 0,
            0, 0.1,
            0.1, 0,
            0.1, 0.1,
            0, -0.1,
            1000, 1000;
  const ExpressionMatrix x = make_expression(std::move(values));
  const ClusterAssignment assignment = kmeans(x, 3, 8);
  CHECK(assignment.singleton_repairs >= 1);
  REQUIRE(assignment.k >= 1);
  std::vector<int> counts(static_cast<std::size_t>(assignment.k), 0);
  for (int label : assignment.labels) {
    REQUIRE(label >= 0);
    REQUIRE(label < assignment.k);
    ++counts[static_cast<std::size_t>(label)];
  }
  for (int count : counts) CHECK(count >= 2);
}

TEST_CASE("k-means precondition checks") {
  const ExpressionMatrix x = two_blobs(4, 0.5, 1);
  CHECK_THROWS_AS(kmeans(x, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(kmeans(x, 5, 0), std::invalid_argument);
}

TEST_CASE("incidence from a hard clustering") {
  ClusterAssignment assignment;
  assignment.labels = {0, 0, 1, 1};
  assignment.k = 2;
  const Hypergraph h = incidence_from_clusters(assignment);
  Matrix expected(4, 2);
  expected << 1, 0,
              1, 0,
              0, 1,
              0, 1;
  CHECK(h.incidence() == expected);
  CHECK(h.edge_weights() == Vector::Ones(2));

  // Hard partitions give unit vertex degree, so S_rw is the kernel itself.
  const DegreeVectors d = compute_degrees(h);
  CHECK((d.vertex - Vector::Ones(4)).cwiseAbs().maxCoeff() == 0.0);
  const OperatorMatrix srw = propagation_matrix(h, d, PropagationKind::random_walk);
  const Matrix kernel = h.incidence() *
                        (h.edge_weights().array() / d.edge.array()).matrix().asDiagonal() *
                        h.incidence().transpose();
  CHECK((srw.values - kernel).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("pipeline determinism: same seed, same incidence") {
  const ExpressionMatrix x = two_blobs(15, 3.0, 21);
  const ExpressionMatrix z = zscore_rows(x);
  const Hypergraph h1 = incidence_from_clusters(kmeans(z, 3, 1234));
  const Hypergraph h2 = incidence_from_clusters(kmeans(z, 3, 1234));
  CHECK(h1.incidence() == h2.incidence());
}
