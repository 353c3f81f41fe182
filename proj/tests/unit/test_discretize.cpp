#include "zsspec/discretize.hpp"
#include "zsspec/eigensolver.hpp"
#include "zsspec/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace zs;

namespace {

ZSOperator build(const PotentialSpec &spec, int n, double a, int lambda = 1) {
  auto basis = std::make_shared<const ChebyshevBasis>(make_basis(n));
  const DomainMap map(a);
  return assemble(basis, map, sample(spec, *basis, map), lambda);
}

} // namespace

TEST_CASE("block structure") {
  const int n = 12;
  const double a = 0.2;
  const auto op = build(PotentialSpec::semiclassical(0.3), n, a);
  REQUIRE(op.matrix.rows() == 2 * n);
  const auto basis = make_basis(n);
  const DomainMap map(a);
  const auto pot = sample(PotentialSpec::semiclassical(0.3), basis, map);

  Eigen::MatrixXd a1 = basis.node_derivative;
  for (int j = 0; j < n; ++j)
    a1.row(j) *= a * (1 - basis.nodes[j] * basis.nodes[j]);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CHECK(std::abs(op.matrix(i, j) + a1(i, j)) <= 1e-12 * (1 + std::abs(a1(i, j))));
      CHECK(std::abs(op.matrix(n + i, n + j) - a1(i, j)) <= 1e-12 * (1 + std::abs(a1(i, j))));
      const cdouble q = i == j ? pot.values[i] : cdouble(0.0);
      CHECK(op.matrix(i, n + j) == q);
      CHECK(op.matrix(n + i, j) == std::conj(q));
    }
}

TEST_CASE("endpoint rows of the derivative blocks vanish") {
  const int n = 10;
  const auto op = build(PotentialSpec::satsuma_yajima(1.0), n, 0.5);
  for (int r : {0, n - 1, n, 2 * n - 1})
    for (int c = 0; c < 2 * n; ++c)
      CHECK(op.matrix(r, c) == cdouble(0.0));
}

TEST_CASE("zero potential gives a spectrum symmetric under negation") {
  auto zero = PotentialSpec::custom([](double) { return cdouble(0.0); }, cdouble(0.0), cdouble(0.0));
  const auto op = build(zero, 16, 0.3);
  const Eigen::MatrixXcd a1 = op.matrix.bottomRightCorner(16, 16);
  CHECK((op.matrix.topLeftCorner(16, 16) + a1).cwiseAbs().maxCoeff() == 0.0);
  const auto mu = eigenvalues(op.matrix).eigenvalues;
  for (int i = 0; i < mu.size(); ++i) {
    double best = 1e300;
    for (int j = 0; j < mu.size(); ++j)
      best = std::min(best, std::abs(mu[i] + mu[j]));
    CHECK(best <= 1e-8 * (1 + std::abs(mu[i])));
  }
}

TEST_CASE("lambda sign flips the lower-left block only") {
  const auto spec = PotentialSpec::solitonic();
  const auto plus = build(spec, 9, 0.3, 1);
  const auto minus = build(spec, 9, 0.3, -1);
  CHECK(plus.matrix.topRows(9) == minus.matrix.topRows(9));
  CHECK(plus.matrix.bottomRightCorner(9, 9) == minus.matrix.bottomRightCorner(9, 9));
  CHECK(plus.matrix.bottomLeftCorner(9, 9) == -minus.matrix.bottomLeftCorner(9, 9));
  CHECK_THROWS_AS(build(spec, 9, 0.3, 0), InvalidArgument);
  CHECK_THROWS_AS(build(spec, 9, 0.3, 2), InvalidArgument);
}

TEST_CASE("grid mismatches are rejected") {
  auto basis = std::make_shared<const ChebyshevBasis>(make_basis(8));
  const DomainMap map(0.3);
  const auto spec = PotentialSpec::solitonic();
  CHECK_THROWS_AS(assemble(basis, map, sample(spec, make_basis(9), map)), InvalidArgument);
  CHECK_THROWS_AS(assemble(basis, map, sample(spec, *basis, DomainMap(0.4))), InvalidArgument);
  CHECK_THROWS_AS(assemble(nullptr, map, sample(spec, *basis, map)), InvalidArgument);
}

TEST_CASE("residual") {
  const auto op = build(PotentialSpec::satsuma_yajima(1.8), 40, 0.15);
  Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(80);
  CHECK_THROWS_AS(residual(op, cdouble(0.0, 1.0), zero), InvalidArgument);
  CHECK_THROWS_AS(residual(op, cdouble(0.0, 1.0), Eigen::VectorXcd::Ones(79)), InvalidArgument);

  const auto dec = eigenvalues(op.matrix, true);
  for (int j = 0; j < 4; ++j) {
    const cdouble k = k_from_mu(dec.eigenvalues[j]);
    const Eigen::VectorXcd v = dec.eigenvectors->col(j);
    CHECK(residual(op, k, v) <= 1e-8 * op.matrix.norm());
    CHECK(residual(op, k, 3.0 * v) == doctest::Approx(residual(op, k, v)).epsilon(1e-10));
  }
}

TEST_CASE("k and mu conversions") {
  CHECK(k_from_mu(cdouble(0.0, 1.0)) == cdouble(1.0, 0.0));
  CHECK(k_from_mu(cdouble(-1.3, 0.0)) == cdouble(0.0, 1.3));
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  for (int i = 0; i < 50; ++i) {
    const cdouble mu(g(rng), g(rng));
    CHECK(std::abs(mu_from_k(k_from_mu(mu)) - mu) <= 1e-15 * std::abs(mu));
  }
}

TEST_CASE("operator csv") {
  const auto op = build(PotentialSpec::solitonic(), 3, 0.5);
  std::ostringstream out;
  write_operator_csv(op, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "row,col,re,im");
  int rows = 0;
  while (std::getline(in, line))
    ++rows;
  CHECK(rows == 36);
}
