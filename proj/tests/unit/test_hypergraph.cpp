#include <doctest.h>

#include <sstream>

#include "hyperprop/hypergraph.hpp"

using namespace hyperprop;

namespace {

Matrix chain_incidence() {
  Matrix h(3, 2);
  h << 1, 0,
       1, 1,
       0, 1;
  return h;
}

}  // namespace

TEST_CASE("degrees of the two-edge chain") {
  const Hypergraph h(chain_incidence(), Vector::Ones(2));
  const DegreeVectors d = compute_degrees(h);
  CHECK(d.vertex(0) == doctest::Approx(1.0));
  CHECK(d.vertex(1) == doctest::Approx(2.0));
  CHECK(d.vertex(2) == doctest::Approx(1.0));
  CHECK(d.edge(0) == doctest::Approx(2.0));
  CHECK(d.edge(1) == doctest::Approx(2.0));
}

TEST_CASE("degrees of a single all-vertex hyperedge") {
  const Hypergraph h(Matrix::Ones(3, 1), Vector::Ones(1));
  const DegreeVectors d = compute_degrees(h);
  CHECK(d.vertex.isApproxToConstant(1.0));
  CHECK(d.edge(0) == doctest::Approx(3.0));
}

TEST_CASE("weighted degrees") {
  Vector w(2);
  w << 2, 3;
  const Hypergraph h(chain_incidence(), w);
  const DegreeVectors d = compute_degrees(h);
  CHECK(d.vertex(0) == doctest::Approx(2.0));
  CHECK(d.vertex(1) == doctest::Approx(5.0));
  CHECK(d.vertex(2) == doctest::Approx(3.0));
  CHECK(d.edge(0) == doctest::Approx(2.0));
  CHECK(d.edge(1) == doctest::Approx(2.0));
}

TEST_CASE("construction rejects invariant violations") {
  SUBCASE("non-binary incidence entry") {
    Matrix h = chain_incidence();
    h(0, 0) = 0.5;
    CHECK_THROWS_AS(Hypergraph(h, Vector::Ones(2)), std::invalid_argument);
  }
  SUBCASE("hyperedge of cardinality one") {
    Matrix h = chain_incidence();
    h(1, 1) = 0;  // edge 1 keeps only vertex 2
    CHECK_THROWS_AS(Hypergraph(h, Vector::Ones(2)), std::invalid_argument);
  }
  SUBCASE("uncovered vertex") {
    Matrix h(4, 1);
    h << 1, 1, 1, 0;
    CHECK_THROWS_AS(Hypergraph(h, Vector::Ones(1)), std::invalid_argument);
  }
  SUBCASE("non-positive edge weight") {
    Vector w(2);
    w << 1, 0;
    CHECK_THROWS_AS(Hypergraph(chain_incidence(), w), std::invalid_argument);
    w << 1, -2;
    CHECK_THROWS_AS(Hypergraph(chain_incidence(), w), std::invalid_argument);
  }
  SUBCASE("weight count mismatch") {
    CHECK_THROWS_AS(Hypergraph(chain_incidence(), Vector::Ones(3)), std::invalid_argument);
  }
}

TEST_CASE("coordinate list round trip") {
  Vector w(2);
  w << 0.5, 1.5;
  const Hypergraph h(chain_incidence(), w);
  std::stringstream buffer;
  write_coordinate_list(h, buffer);
  CHECK(buffer.str() == "0\t0\t1\n1\t0\t1\n1\t1\t1\n2\t1\t1\n");

  const Hypergraph parsed = read_coordinate_list(buffer, 3, 2, w);
  CHECK(parsed.incidence() == h.incidence());
  CHECK(parsed.edge_weights() == h.edge_weights());
}

TEST_CASE("coordinate list rejects malformed input") {
  std::stringstream bad("0\t0\t1\nnot a row\n");
  CHECK_THROWS_WITH_AS(read_coordinate_list(bad, 3, 2), doctest::Contains("line 2"),
                       std::invalid_argument);
  std::stringstream out_of_range("5\t0\t1\n");
  CHECK_THROWS_AS(read_coordinate_list(out_of_range, 3, 2), std::invalid_argument);
}
