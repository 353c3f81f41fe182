#include "zsspec/chebyshev.hpp"
#include "zsspec/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace zs;

TEST_CASE("nodes are ascending Gauss-Lobatto points") {
  const auto b3 = make_basis(3);
  CHECK(b3.nodes[0] == -1.0);
  CHECK(b3.nodes[1] == 0.0);
  CHECK(b3.nodes[2] == 1.0);

  const auto b5 = make_basis(5);
  const double r = std::sqrt(2.0) / 2.0;
  CHECK(b5.nodes[1] == doctest::Approx(-r).epsilon(1e-15));
  CHECK(b5.nodes[2] == 0.0);
  CHECK(b5.nodes[3] == doctest::Approx(r).epsilon(1e-15));

  for (int n : {2, 7, 40, 101}) {
    const auto b = make_basis(n);
    CHECK(b.nodes[0] == -1.0);
    CHECK(b.nodes[n - 1] == 1.0);
    for (int j = 0; j + 1 < n; ++j)
      CHECK(b.nodes[j] < b.nodes[j + 1]);
    for (int j = 0; j < n; ++j)
      CHECK(std::abs(b.nodes[j] - std::cos((n - 1 - j) * std::numbers::pi / (n - 1))) < 1e-15);
  }
}

TEST_CASE("n = 2 transform matches direct 2x2 inversion") {
  const auto b = make_basis(2);
  // [[p, q], [r, s]]^{-1} = [[s, -q], [-r, p]] / (ps - qr)
  const double p = b.vandermonde(0, 0), q = b.vandermonde(0, 1);
  const double r = b.vandermonde(1, 0), s = b.vandermonde(1, 1);
  CHECK(p == 1.0);
  CHECK(q == -1.0);
  CHECK(r == 1.0);
  CHECK(s == 1.0);
  const double det = p * s - q * r;
  CHECK(b.transform(0, 0) == doctest::Approx(s / det));
  CHECK(b.transform(0, 1) == doctest::Approx(-q / det));
  CHECK(b.transform(1, 0) == doctest::Approx(-r / det));
  CHECK(b.transform(1, 1) == doctest::Approx(p / det));
}

TEST_CASE("basis rejects n < 2") {
  CHECK_THROWS_AS(make_basis(1), InvalidArgument);
  CHECK_THROWS_AS(make_basis(0), InvalidArgument);
  CHECK_THROWS_AS(derivative_matrix(1), InvalidArgument);
}

TEST_CASE("eval_poly") {
  CHECK(eval_poly(0, 0.37) == 1.0);
  CHECK(eval_poly(0, -1.0) == 1.0);
  const double x = 0.5;
  CHECK(eval_poly(2, x) == doctest::Approx(2 * x * x - 1).epsilon(1e-15));
  CHECK(eval_poly(7, std::cos(0.3)) == doctest::Approx(std::cos(2.1)).epsilon(1e-13));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double t = u(rng);
    const int k = trial % 90;
    CHECK(std::abs(eval_poly(k, t)) <= 1.0 + 1e-12);
    CHECK(std::abs(eval_poly(k, t) - std::cos(k * std::acos(t))) < 1e-11);
  }
}

TEST_CASE("derivative matrix columns") {
  const auto d4 = derivative_matrix(4);
  for (int i = 0; i < 4; ++i)
    CHECK(d4(i, 0) == 0.0);
  CHECK(d4(0, 1) == 1.0);
  CHECK(d4.col(1).sum() == 1.0);
  CHECK(d4(1, 2) == 4.0);
  CHECK(d4.col(2).sum() == 4.0);

  Eigen::MatrixXd even(4, 4);
  even << 0, 1, 0, 3,
          0, 0, 4, 0,
          0, 0, 0, 6,
          0, 0, 0, 0;
  CHECK(d4 == even);
  Eigen::MatrixXd odd(5, 5);
  odd << 0, 1, 0, 3, 0,
         0, 0, 4, 0, 8,
         0, 0, 0, 6, 0,
         0, 0, 0, 0, 8,
         0, 0, 0, 0, 0;
  CHECK(derivative_matrix(5) == odd);

  const auto d = derivative_matrix(12);
  for (int i = 0; i < 12; ++i)
    for (int k = 0; k <= i; ++k)
      CHECK(d(i, k) == 0.0);
}

TEST_CASE("derivative matrix reproduces T_k' and T_k''") {
  const int n = 16;
  const auto d = derivative_matrix(n);
  const Eigen::MatrixXd d2 = d * d;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.95, 0.95);
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXcd first = d.col(k).cast<std::complex<double>>();
    Eigen::VectorXcd second = d2.col(k).cast<std::complex<double>>();
    for (int s = 0; s < 10; ++s) {
      const double x = u(rng);
      const double theta = std::acos(x);
      // T_k'(cos t) = k sin(k t) / sin t; (1 - x^2) T'' = x T' - k^2 T.
      const double tk = std::cos(k * theta);
      const double dtk = k * std::sin(k * theta) / std::sin(theta);
      const double d2tk = (x * dtk - k * k * tk) / (1 - x * x);
      CHECK(std::abs(evaluate_series(first, x).real() - dtk) <= 1e-11 * (1 + std::abs(dtk)));
      CHECK(std::abs(evaluate_series(second, x).real() - d2tk) <= 1e-9 * (1 + std::abs(d2tk)));
    }
  }
}

TEST_CASE("to_coefficients") {
  const auto b = make_basis(5);
  Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(5);
  Eigen::VectorXcd c = to_coefficients(b, ones);
  CHECK(std::abs(c[0] - 1.0) < 1e-14);
  for (int k = 1; k < 5; ++k)
    CHECK(std::abs(c[k]) < 1e-14);

  c = to_coefficients(b, b.nodes.cast<std::complex<double>>());
  CHECK(std::abs(c[1] - 1.0) < 1e-14);
  CHECK(std::abs(c[0]) + std::abs(c[2]) + std::abs(c[3]) + std::abs(c[4]) < 1e-14);

  Eigen::VectorXcd sq = b.nodes.array().square().cast<std::complex<double>>();
  c = to_coefficients(b, sq);
  const double expected[] = {0.5, 0.0, 0.5, 0.0, 0.0};
  for (int k = 0; k < 5; ++k)
    CHECK(std::abs(c[k] - expected[k]) < 1e-14);

  CHECK_THROWS_AS(to_coefficients(b, Eigen::VectorXcd::Ones(4)), InvalidArgument);
}

TEST_CASE("transform inverts the Vandermonde matrix") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int n : {2, 3, 8, 17, 33, 64}) {
    const auto b = make_basis(n);
    const Eigen::MatrixXd eye = b.vandermonde * b.transform;
    CHECK((eye - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-12);
    Eigen::VectorXcd v(n);
    for (int j = 0; j < n; ++j)
      v[j] = {g(rng), g(rng)};
    const Eigen::VectorXcd back = b.vandermonde.cast<std::complex<double>>() * to_coefficients(b, v);
    CHECK((back - v).cwiseAbs().maxCoeff() <= 1e-12 * v.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("polynomials are interpolated and differentiated exactly") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n : {4, 9, 24, 48, 64}) {
    const auto b = make_basis(n);
    const int degree = n - 1;
    // Random polynomial in monomial form, independent of the Chebyshev path.
    std::vector<double> p(degree + 1);
    for (auto &c : p)
      c = g(rng) / (1.0 + 0.2 * (&c - p.data()));
    auto eval = [&](double x) {
      double s = 0.0;
      for (int j = degree; j >= 0; --j)
        s = s * x + p[j];
      return s;
    };
    auto eval_d = [&](double x) {
      double s = 0.0;
      for (int j = degree; j >= 1; --j)
        s = s * x + j * p[j];
      return s;
    };
    Eigen::VectorXcd values(n), dvalues(n);
    for (int j = 0; j < n; ++j) {
      values[j] = eval(b.nodes[j]);
      dvalues[j] = eval_d(b.nodes[j]);
    }
    const Eigen::VectorXcd coeffs = to_coefficients(b, values);
    double scale = values.cwiseAbs().maxCoeff();
    for (int s = 0; s < 100; ++s) {
      const double x = u(rng);
      CHECK(std::abs(evaluate_series(coeffs, x) - eval(x)) <= 1e-10 * scale);
    }
    const Eigen::VectorXcd d = b.node_derivative.cast<std::complex<double>>() * values;
    scale = dvalues.cwiseAbs().maxCoeff();
    CHECK((d - dvalues).cwiseAbs().maxCoeff() <= 1e-9 * scale);
  }
}
