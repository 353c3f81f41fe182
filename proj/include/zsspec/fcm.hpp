#pragma once

#include "zsspec/potentials.hpp"
#include "zsspec/spectrum.hpp"

#include <Eigen/Dense>

namespace zs {

/// m equispaced nodes on the periodic interval [-L, L).
struct FourierGrid {
  double half_width = 25.0;
  int m = 0;
  Eigen::VectorXd nodes;

  double spacing() const { return 2.0 * half_width / m; }
};

FourierGrid make_fourier_grid(double half_width, int m);

/// Dense periodic spectral differentiation matrix for even m (cotangent form).
Eigen::MatrixXd fourier_derivative_matrix(const FourierGrid &grid);

/// Classifier defaults for the baseline: tau_im only, no confirmation solve.
inline ClassifierOptions fcm_default_classifier() {
  ClassifierOptions options;
  options.confirm = false;
  return options;
}

/// Fourier-collocation counterpart of compute_spectrum on the truncated
/// interval. Classification uses tau_im only unless options.confirm is set,
/// in which case the confirmation grid has m + m/4 (rounded up to even) nodes.
SpectrumResult fcm_spectrum(const PotentialSpec &spec, double half_width, int m,
                            int lambda_sign = 1, const ClassifierOptions &options = fcm_default_classifier());

} // namespace zs
