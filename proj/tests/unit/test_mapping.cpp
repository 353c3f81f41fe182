#include "zsspec/chebyshev.hpp"
#include "zsspec/errors.hpp"
#include "zsspec/mapping.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace zs;

TEST_CASE("forward") {
  CHECK(DomainMap(0.15).forward(0.0) == 0.0);
  CHECK(DomainMap(1.0).forward(std::numeric_limits<double>::infinity()) == 1.0);
  CHECK(DomainMap(1.0).forward(1e6) == 1.0);
  CHECK(DomainMap(0.5).forward(2.0) == doctest::Approx(std::tanh(1.0)).epsilon(1e-15));
  const DomainMap m(0.3);
  for (double x = -10; x < 10; x += 0.25)
    CHECK(m.forward(x) < m.forward(x + 0.25));
}

TEST_CASE("inverse") {
  CHECK(DomainMap(0.1).inverse(0.0) == 0.0);
  CHECK(DomainMap(1.0).inverse(std::tanh(3.0)) == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(DomainMap(0.15).inverse(1.0) == std::numeric_limits<double>::infinity());
  CHECK(DomainMap(0.15).inverse(-1.0) == -std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(DomainMap(0.15).inverse(1.0000001), InvalidArgument);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-0.999, 0.999);
  const DomainMap m(0.15);
  for (int i = 0; i < 100; ++i) {
    const double chi = u(rng);
    CHECK(std::abs(m.forward(m.inverse(chi)) - chi) <= 1e-12);
  }
}

TEST_CASE("derivative at image") {
  CHECK(DomainMap(0.15).derivative_at_image(0.0) == 0.15);
  for (double a : {0.01, 0.15, 3.0}) {
    CHECK(DomainMap(a).derivative_at_image(1.0) == 0.0);
    CHECK(DomainMap(a).derivative_at_image(-1.0) == 0.0);
  }
  const DomainMap m2(2.0);
  CHECK(m2.derivative_at_image(0.6) == doctest::Approx(1.28).epsilon(1e-15));
  const double sech = 1.0 / std::cosh(2.0 * m2.inverse(0.6));
  CHECK(m2.derivative_at_image(0.6) == doctest::Approx(2.0 * sech * sech).epsilon(1e-12));
  CHECK_THROWS_AS(m2.derivative_at_image(-1.5), InvalidArgument);
}

TEST_CASE("derivative agrees with a centred difference of forward") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-0.95, 0.95);
  const DomainMap m(0.4);
  const double h = 1e-5;
  for (int i = 0; i < 20; ++i) {
    const double x = m.inverse(u(rng));
    const double fd = (m.forward(x + h) - m.forward(x - h)) / (2 * h);
    CHECK(std::abs(fd - m.derivative_at_image(m.forward(x))) <= 1e-7);
  }
}

TEST_CASE("steepness must be positive") {
  CHECK_THROWS_AS(DomainMap(0.0), InvalidArgument);
  CHECK_THROWS_AS(DomainMap(-1.0), InvalidArgument);
}

TEST_CASE("mapped differentiation follows the chain rule") {
  const int n = 64;
  const DomainMap m(0.5);
  const auto b = make_basis(n);
  Eigen::VectorXcd g(n), dg(n);
  for (int j = 0; j < n; ++j) {
    const double x = m.inverse(b.nodes[j]);
    g[j] = std::isinf(x) ? 0.0 : std::exp(-x * x);
    dg[j] = std::isinf(x) ? 0.0 : -2.0 * x * std::exp(-x * x);
  }
  Eigen::VectorXcd approx = b.node_derivative.cast<std::complex<double>>() * g;
  for (int j = 0; j < n; ++j)
    approx[j] *= m.derivative_at_image(b.nodes[j]);
  const double scale = dg.cwiseAbs().maxCoeff();
  for (int j = 1; j + 1 < n; ++j)
    CHECK(std::abs(approx[j] - dg[j]) <= 1e-6 * scale);
  CHECK(approx[0] == std::complex<double>(0.0));
  CHECK(approx[n - 1] == std::complex<double>(0.0));
}
