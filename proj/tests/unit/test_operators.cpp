#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "hyperprop/operators.hpp"
#include "support/random_instances.hpp"

using namespace hyperprop;
using hyperprop::testing::random_hypergraph;
using hyperprop::testing::random_vector;

namespace {

Hypergraph chain() {
  Matrix h(3, 2);
  h << 1, 0,
       1, 1,
       0, 1;
  return Hypergraph(std::move(h), Vector::Ones(2));
}

}  // namespace

TEST_CASE("unnormalized Laplacian of the chain") {
  const Hypergraph h = chain();
  const DegreeVectors d = compute_degrees(h);
  const OperatorMatrix l = unnormalized_laplacian(h, d);
  Matrix expected(3, 3);
  expected << 0.5, -0.5, 0.0,
             -0.5, 1.0, -0.5,
              0.0, -0.5, 0.5;
  CHECK((l.values - expected).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((l.values * Vector::Ones(3)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("single all-vertex hyperedge gives I - J/3") {
  const Hypergraph h(Matrix::Ones(3, 1), Vector::Ones(1));
  const DegreeVectors d = compute_degrees(h);
  const OperatorMatrix l = unnormalized_laplacian(h, d);
  const Matrix expected = Matrix::Identity(3, 3) - Matrix::Constant(3, 3, 1.0 / 3.0);
  CHECK((l.values - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("symmetric Laplacian of the chain") {
  const Hypergraph h = chain();
  const DegreeVectors d = compute_degrees(h);
  const OperatorMatrix lsym = symmetric_laplacian(h, d);
  const double off = -1.0 / (2.0 * std::sqrt(2.0));
  Matrix expected(3, 3);
  expected << 0.5, off, 0.0,
              off, 0.5, off,
              0.0, off, 0.5;
  CHECK((lsym.values - expected).cwiseAbs().maxCoeff() < 1e-14);

  const Vector null_vec = d.vertex.array().sqrt();
  CHECK((lsym.values * null_vec).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("random walk Laplacian of the chain") {
  const Hypergraph h = chain();
  const DegreeVectors d = compute_degrees(h);
  const OperatorMatrix lrw = random_walk_laplacian(h, d);
  Matrix expected(3, 3);
  expected << 0.5, -0.5, 0.0,
             -0.25, 0.5, -0.25,
              0.0, -0.5, 0.5;
  CHECK((lrw.values - expected).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((lrw.values * Vector::Ones(3)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("propagation matrices of the chain") {
  const Hypergraph h = chain();
  const DegreeVectors d = compute_degrees(h);
  const OperatorMatrix srw = propagation_matrix(h, d, PropagationKind::random_walk);
  Matrix expected(3, 3);
  expected << 0.5, 0.5, 0.0,
              0.25, 0.5, 0.25,
              0.0, 0.5, 0.5;
  CHECK((srw.values - expected).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((srw.values * Vector::Ones(3) - Vector::Ones(3)).cwiseAbs().maxCoeff() < 1e-10);

  const OperatorMatrix ssym = propagation_matrix(h, d, PropagationKind::symmetric);
  const OperatorMatrix lsym = symmetric_laplacian(h, d);
  CHECK((ssym.values - (Matrix::Identity(3, 3) - lsym.values)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("quadratic form hand values") {
  const Hypergraph h = chain();
  const DegreeVectors d = compute_degrees(h);
  CHECK(quadratic_form(h, d, Vector::Ones(3)) == doctest::Approx(0.0));
  Vector f(3);
  f << 1, 0, -1;
  CHECK(quadratic_form(h, d, f) == doctest::Approx(1.0));
  CHECK_THROWS_AS(quadratic_form(h, d, Vector::Ones(4)), std::invalid_argument);
}

TEST_CASE("null vectors, stochasticity and quadratic form identity on random instances") {
  Rng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 50, 15);
    const DegreeVectors d = compute_degrees(h);
    const Index n = h.n_vertices();

    const OperatorMatrix l = unnormalized_laplacian(h, d);
    const OperatorMatrix lsym = symmetric_laplacian(h, d);
    const OperatorMatrix lrw = random_walk_laplacian(h, d);
    const OperatorMatrix srw = propagation_matrix(h, d, PropagationKind::random_walk);

    CHECK((l.values - l.values.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((lsym.values - lsym.values.transpose()).cwiseAbs().maxCoeff() <= 1e-12);

    CHECK((l.values * Vector::Ones(n)).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((lrw.values * Vector::Ones(n)).cwiseAbs().maxCoeff() <= 1e-10);
    const Vector sqrt_deg = d.vertex.array().sqrt();
    CHECK((lsym.values * sqrt_deg).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((srw.values * Vector::Ones(n) - Vector::Ones(n)).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(srw.values.minCoeff() >= 0.0);

    for (int rep = 0; rep < 10; ++rep) {
      const Vector f = random_vector(rng, n);
      const double direct = quadratic_form(h, d, f);
      const double via_matrix = f.dot(l.values * f);
      CHECK(std::abs(direct - via_matrix) <= 1e-8 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST_CASE("Laplacians are positive semi-definite") {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 30, 10);
    const DegreeVectors d = compute_degrees(h);
    const auto [l_min, l_max] = spectrum_extremes(unnormalized_laplacian(h, d));
    CHECK(l_min >= -1e-10);
    const auto [sym_min, sym_max] = spectrum_extremes(symmetric_laplacian(h, d));
    CHECK(sym_min >= -1e-10);
    const auto [rw_min, rw_max] = spectrum_extremes(random_walk_laplacian(h, d));
    CHECK(rw_min >= -1e-10);

    const auto [srw_min, srw_max] = spectrum_extremes(
        propagation_matrix(h, d, PropagationKind::random_walk));
    CHECK(std::max(std::abs(srw_min), std::abs(srw_max)) <= 1.0 + 1e-10);
    const auto [ssym_min, ssym_max] = spectrum_extremes(
        propagation_matrix(h, d, PropagationKind::symmetric));
    CHECK(ssym_min >= -1.0 - 1e-10);
    CHECK(ssym_max <= 1.0 + 1e-10);
  }
}

TEST_CASE("random walk and symmetric Laplacians share their spectrum") {
  Rng rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 20, 8);
    const DegreeVectors d = compute_degrees(h);
    const Index n = h.n_vertices();
    const OperatorMatrix lsym = symmetric_laplacian(h, d);
    const OperatorMatrix lrw = random_walk_laplacian(h, d);
    const OperatorMatrix l = unnormalized_laplacian(h, d);

    // Similarity identity L_sym = Dv^1/2 L_rw Dv^-1/2.
    const Vector sqrt_deg = d.vertex.array().sqrt();
    const Vector inv_sqrt = d.vertex.array().rsqrt();
    const Matrix conjugated = sqrt_deg.asDiagonal() * lrw.values * inv_sqrt.asDiagonal();
    CHECK((conjugated - lsym.values).cwiseAbs().maxCoeff() <= 1e-10);

    Eigen::SelfAdjointEigenSolver<Matrix> sym_solver(lsym.values, Eigen::EigenvaluesOnly);
    Eigen::EigenSolver<Matrix> rw_solver(lrw.values);
    REQUIRE(rw_solver.info() == Eigen::Success);
    CHECK(rw_solver.eigenvalues().imag().cwiseAbs().maxCoeff() <= 1e-8);

    std::vector<double> rw_eigs(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) rw_eigs[static_cast<std::size_t>(i)] = rw_solver.eigenvalues()(i).real();
    std::sort(rw_eigs.begin(), rw_eigs.end());
    for (Index i = 0; i < n; ++i) {
      CHECK(std::abs(rw_eigs[static_cast<std::size_t>(i)] - sym_solver.eigenvalues()(i)) <= 1e-8);
    }

    // Each L_rw eigenpair solves the generalized problem L u = lambda Dv u.
    const Matrix dv = d.vertex.asDiagonal();
    for (Index i = 0; i < n; ++i) {
      const std::complex<double> lambda = rw_solver.eigenvalues()(i);
      const Eigen::VectorXcd u = rw_solver.eigenvectors().col(i);
      const double residual =
          (l.values.cast<std::complex<double>>() * u - lambda * (dv.cast<std::complex<double>>() * u))
              .cwiseAbs()
              .maxCoeff();
      CHECK(residual <= 1e-8);
    }
  }
}

TEST_CASE("operator construction rejects mismatched degrees") {
  const Hypergraph h = chain();
  DegreeVectors wrong;
  wrong.vertex = Vector::Ones(4);
  wrong.edge = Vector::Ones(2);
  CHECK_THROWS_AS(unnormalized_laplacian(h, wrong), std::invalid_argument);
}
