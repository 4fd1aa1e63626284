#include <doctest.h>

#include "hyperprop/coexpression.hpp"
#include "hyperprop/labels.hpp"

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

}  // namespace

TEST_CASE("absolute Pearson similarity") {
  Matrix values(4, 3);
  values << 1, 2, 3,
            2, 4, 6,
            3, 2, 1,
            1, 0, 1;
  const SimilarityMatrix s = coexpression_similarity(make_expression(std::move(values)));

  CHECK(s.values(0, 1) == doctest::Approx(1.0));   // perfectly correlated
  CHECK(s.values(0, 2) == doctest::Approx(1.0));   // |-1| = 1
  CHECK(s.values(0, 3) == doctest::Approx(0.0));   // orthogonal after centering
  CHECK((s.values - s.values.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(s.values.minCoeff() >= 0.0);
  CHECK(s.values.maxCoeff() <= 1.0);
  for (Index i = 0; i < 4; ++i) CHECK(s.values(i, i) == doctest::Approx(1.0));
}

TEST_CASE("zero-variance rows correlate with nothing") {
  Matrix values(2, 3);
  values << 5, 5, 5,
            1, 2, 3;
  const SimilarityMatrix s = coexpression_similarity(make_expression(std::move(values)));
  CHECK(s.values(0, 0) == 0.0);
  CHECK(s.values(0, 1) == 0.0);
  CHECK(s.values(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("threshold adjacency uses strict inequality and drops self-loops") {
  SimilarityMatrix s;
  s.values.resize(3, 3);
  s.values << 1.0, 0.6, 0.5,
              0.6, 1.0, 0.2,
              0.5, 0.2, 1.0;
  const AdjacencyMatrix a = threshold_adjacency(s, 0.5);
  CHECK(a.values(0, 1) == 1.0);
  CHECK(a.values(1, 0) == 1.0);
  CHECK(a.values(0, 2) == 0.0);  // s = threshold exactly -> no edge
  CHECK(a.values(1, 2) == 0.0);
  for (Index i = 0; i < 3; ++i) CHECK(a.values(i, i) == 0.0);

  CHECK_THROWS_AS(threshold_adjacency(s, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(threshold_adjacency(s, -0.1), std::invalid_argument);
}

TEST_CASE("graph Laplacian hand values") {
  SUBCASE("single edge") {
    AdjacencyMatrix a;
    a.values.resize(2, 2);
    a.values << 0, 1,
                1, 0;
    const OperatorMatrix l = graph_laplacian(a);
    Matrix expected(2, 2);
    expected << 1, -1,
               -1, 1;
    CHECK(l.values == expected);
  }
  SUBCASE("empty graph") {
    AdjacencyMatrix a;
    a.values = Matrix::Zero(3, 3);
    CHECK(graph_laplacian(a).values == Matrix::Zero(3, 3));
  }
  SUBCASE("path over three nodes") {
    AdjacencyMatrix a;
    a.values.resize(3, 3);
    a.values << 0, 1, 0,
                1, 0, 1,
                0, 1, 0;
    const OperatorMatrix l = graph_laplacian(a);
    Matrix expected(3, 3);
    expected << 1, -1, 0,
               -1, 2, -1,
                0, -1, 1;
    CHECK(l.values == expected);
    CHECK((l.values * Vector::Ones(3)).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("regularized baseline solve stays well-posed with an isolated vertex") {
  AdjacencyMatrix a;
  a.values.resize(3, 3);
  a.values << 0, 1, 0,
              1, 0, 0,
              0, 0, 0;  // vertex 2 isolated
  const OperatorMatrix l = graph_laplacian(a);
  Matrix y(3, 1);
  y << 1, 0, -1;
  const LabelMatrix f = solve_unnormalized(l, {y, LabelRole::initial}, 1.0);
  CHECK(f.values.allFinite());
  // The isolated vertex sees only the fidelity term: (0 + gamma) F = gamma Y.
  CHECK(f.values(2, 0) == doctest::Approx(-1.0));
}
