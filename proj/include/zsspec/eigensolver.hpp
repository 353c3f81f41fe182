#pragma once

#include "zsspec/errors.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>

namespace zs {

struct EigenDecomposition {
  Eigen::VectorXcd eigenvalues;
  /// Column j pairs with eigenvalues[j]; unit 2-norm.
  std::optional<Eigen::MatrixXcd> eigenvectors;
  int iterations_used = 0;
  bool converged = false;
};

/// Raised when the QR iteration hits its step cap. Carries whatever had
/// deflated by then (the remaining entries are the current diagonal).
class NonConvergence : public NumericError {
public:
  NonConvergence(const std::string &what, EigenDecomposition partial)
      : NumericError(what), partial_(std::move(partial)) {}
  const EigenDecomposition &partial() const { return partial_; }

private:
  EigenDecomposition partial_;
};

/// All eigenvalues of a dense complex matrix.
///
/// Pipeline: diagonal balancing, Householder reduction to upper Hessenberg
/// form, then single-shift QR steps (Wilkinson shift, exceptional shifts on
/// stagnation) with deflation when
/// |h(j+1,j)| <= eps * (|h(j,j)| + |h(j+1,j+1)|). At most 30 m steps are
/// taken in total. Output is sorted by descending imaginary part, ties broken
/// by ascending real part. Eigenvectors, when requested, come from inverse
/// iteration on the original matrix.
EigenDecomposition eigenvalues(const Eigen::MatrixXcd &m, bool want_vectors = false);

/// One explicit shifted QR step on an upper Hessenberg matrix:
/// H - s I = Q R, returns R Q + s I (= Q^H H Q).
Eigen::MatrixXcd qr_step(const Eigen::MatrixXcd &h, std::complex<double> shift);

/// Unit-norm right eigenvector for an (approximate) eigenvalue `mu`, by
/// inverse iteration with a slightly perturbed shift and a fixed start vector.
/// Guarantees ||M v - mu v|| <= 1e-8 ||M||_F or throws NumericError.
Eigen::VectorXcd eigenvector_for(const Eigen::MatrixXcd &m, std::complex<double> mu);

/// Householder reduction to upper Hessenberg form (similarity transform).
Eigen::MatrixXcd hessenberg(const Eigen::MatrixXcd &m);

/// Diagonal similarity scaling by powers of two equalizing row and column norms.
Eigen::MatrixXcd balance(const Eigen::MatrixXcd &m);

/// True when every entry below the first subdiagonal is exactly zero.
bool is_hessenberg(const Eigen::MatrixXcd &m);

} // namespace zs
