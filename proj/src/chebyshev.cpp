#include "zsspec/chebyshev.hpp"

#include "zsspec/errors.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <string>

namespace zs {

namespace {

void require_size(int n) {
  if (n < 2)
    throw InvalidArgument("Chebyshev basis needs n >= 2, got " + std::to_string(n));
}

} // namespace

double eval_poly(int k, double x) {
  if (k == 0)
    return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int j = 2; j <= k; ++j) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Eigen::MatrixXd derivative_matrix(int n) {
  require_size(n);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  // Column k holds the Chebyshev coefficients of T_k'. Run the backward
  // recurrence c'_{j-1} = c'_{j+1} + 2 j c_j with c = e_k.
  std::vector<double> dc(n + 1);
  for (int k = 1; k < n; ++k) {
    std::fill(dc.begin(), dc.end(), 0.0);
    for (int j = k; j >= 1; --j)
      dc[j - 1] = dc[j + 1] + (j == k ? 2.0 * j : 0.0);
    dc[0] *= 0.5;
    for (int i = 0; i < k; ++i)
      d(i, k) = dc[i];
  }
  return d;
}

ChebyshevBasis make_basis(int n) {
  require_size(n);
  if (n > 600)
    std::cerr << "warning: Chebyshev basis with n = " << n
              << " > 600; the value/coefficient transform loses conditioning\n";

  ChebyshevBasis b;
  b.n = n;
  b.nodes.resize(n);
  for (int j = 0; j < n; ++j)
    b.nodes[j] = std::cos(static_cast<double>(n - 1 - j) * std::numbers::pi / (n - 1));
  b.nodes[0] = -1.0;
  b.nodes[n - 1] = 1.0;
  // Exact symmetry about the midpoint; cos() rounding leaves ~1e-17 dust at
  // the centre and breaks the even/odd pairing of the nodes otherwise.
  for (int j = 0; j < n / 2; ++j) {
    const double v = 0.5 * (b.nodes[n - 1 - j] - b.nodes[j]);
    b.nodes[j] = -v;
    b.nodes[n - 1 - j] = v;
  }
  if (n % 2 == 1)
    b.nodes[n / 2] = 0.0;

  b.vandermonde.resize(n, n);
  for (int j = 0; j < n; ++j) {
    const double x = b.nodes[j];
    double prev = 1.0;
    double cur = x;
    b.vandermonde(j, 0) = 1.0;
    if (n > 1)
      b.vandermonde(j, 1) = x;
    for (int k = 2; k < n; ++k) {
      const double next = 2.0 * x * cur - prev;
      prev = cur;
      cur = next;
      b.vandermonde(j, k) = cur;
    }
  }

  b.transform = b.vandermonde.partialPivLu().solve(Eigen::MatrixXd::Identity(n, n));
  b.deriv = derivative_matrix(n);
  b.node_derivative = b.vandermonde * b.deriv * b.transform;
  return b;
}

Eigen::VectorXcd to_coefficients(const ChebyshevBasis &basis,
                                 const Eigen::VectorXcd &values) {
  if (values.size() != basis.n)
    throw InvalidArgument("to_coefficients: expected " + std::to_string(basis.n) +
                          " values, got " + std::to_string(values.size()));
  return basis.transform.cast<std::complex<double>>() * values;
}

std::complex<double> evaluate_series(const Eigen::VectorXcd &coeffs, double x) {
  std::complex<double> b1 = 0.0;
  std::complex<double> b2 = 0.0;
  for (Eigen::Index k = coeffs.size() - 1; k >= 1; --k) {
    const std::complex<double> b0 = coeffs[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  if (coeffs.size() == 0)
    return 0.0;
  return coeffs[0] + x * b1 - b2;
}

} // namespace zs
