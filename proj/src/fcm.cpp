#include "zsspec/fcm.hpp"

#include "zsspec/discretize.hpp"
#include "zsspec/eigensolver.hpp"
#include "zsspec/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace zs {

namespace {

// Same block layout as the Chebyshev operator with the periodic derivative.
Eigen::MatrixXcd fcm_operator(const PotentialSpec &spec, double half_width, int m,
                              int lambda_sign) {
  const FourierGrid grid = make_fourier_grid(half_width, m);
  const Eigen::MatrixXcd d = fourier_derivative_matrix(grid).cast<cdouble>();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  a.topLeftCorner(m, m) = -d;
  a.bottomRightCorner(m, m) = d;
  for (int j = 0; j < m; ++j) {
    const cdouble q = spec.evaluate(grid.nodes[j]);
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag()))
      throw NumericError(spec.descriptor() + ": non-finite potential value at Fourier node " +
                         std::to_string(j));
    a(j, m + j) = q;
    a(m + j, j) = static_cast<double>(lambda_sign) * std::conj(q);
  }
  return a;
}

Eigen::VectorXcd operator_k(const Eigen::MatrixXcd &a) {
  const EigenDecomposition eig = eigenvalues(a, false);
  Eigen::VectorXcd k(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < k.size(); ++i)
    k[i] = k_from_mu(eig.eigenvalues[i]);
  sort_spectral_order(k);
  return k;
}

} // namespace

FourierGrid make_fourier_grid(double half_width, int m) {
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw InvalidArgument("Fourier half-width must be positive");
  if (m < 8 || m % 2 != 0)
    throw InvalidArgument("Fourier grid needs an even m >= 8, got " + std::to_string(m));
  FourierGrid g;
  g.half_width = half_width;
  g.m = m;
  g.nodes.resize(m);
  for (int j = 0; j < m; ++j)
    g.nodes[j] = -half_width + j * g.spacing();
  return g;
}

Eigen::MatrixXd fourier_derivative_matrix(const FourierGrid &grid) {
  const int m = grid.m;
  const double scale = std::numbers::pi / grid.half_width;
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j)
        continue;
      const int diff = i - j;
      const double sign = (diff % 2 == 0) ? 1.0 : -1.0;
      d(i, j) = scale * 0.5 * sign / std::tan(std::numbers::pi * diff / m);
    }
  return d;
}

SpectrumResult fcm_spectrum(const PotentialSpec &spec, double half_width, int m,
                            int lambda_sign, const ClassifierOptions &options) {
  if (lambda_sign != 1 && lambda_sign != -1)
    throw InvalidArgument("lambda_sign must be +1 or -1");
  const Eigen::MatrixXcd a = fcm_operator(spec, half_width, m, lambda_sign);

  SpectrumResult result;
  result.params = {"fcm", m, half_width, lambda_sign, spec.descriptor(), options};
  result.all_k = operator_k(a);
  if (options.confirm) {
    int m2 = m + (m + 3) / 4;
    m2 += m2 % 2;
    const Eigen::VectorXcd confirm = operator_k(fcm_operator(spec, half_width, m2, lambda_sign));
    result.discrete_k = select_discrete(result.all_k, &confirm, options);
  } else {
    result.discrete_k = select_discrete(result.all_k, nullptr, options);
  }
  for (const cdouble k : result.discrete_k) {
    const cdouble mu = mu_from_k(k);
    const Eigen::VectorXcd v = eigenvector_for(a, mu);
    result.residuals.push_back((a * v - mu * v).norm() / v.norm());
  }
  return result;
}

} // namespace zs
