#pragma once

#include "zsspec/discretize.hpp"
#include "zsspec/potentials.hpp"

#include <Eigen/Dense>

#include <string>
#include <utility>
#include <vector>

namespace zs {

/// Discrete/continuous separation thresholds.
struct ClassifierOptions {
  /// |Im k| must exceed this to leave the continuous-spectrum band.
  double tau_im = 1e-2;
  /// Candidates must reappear within this distance at the confirmation size.
  double delta_match = 1e-4;
  /// Candidates closer than this are reported once.
  double merge_radius = 1e-8;
  /// Run the confirmation solve at n' = n + ceil(n / 4).
  bool confirm = true;
};

struct SpectrumParams {
  std::string method = "chebyshev";
  /// n for Chebyshev, m for Fourier.
  int size = 0;
  /// Map steepness a (Chebyshev) or half-width L (Fourier).
  double scale = 0.0;
  int lambda_sign = 1;
  std::string potential;
  ClassifierOptions classifier;
};

struct SpectrumResult {
  /// All 2n values k = -i mu, in eigensolver order.
  Eigen::VectorXcd all_k;
  /// Subset classified as discrete, sorted like all_k.
  std::vector<cdouble> discrete_k;
  /// Operator residual of each discrete_k.
  std::vector<double> residuals;
  SpectrumParams params;
};

/// Sorts by descending imaginary part, ties by ascending real part.
void sort_spectral_order(Eigen::VectorXcd &values);

/// k for every eigenvalue of the assembled operator, sorted by the
/// eigensolver's order.
Eigen::VectorXcd raw_spectrum(const PotentialSpec &spec, int n, double a,
                              int lambda_sign = 1);

/// Assemble, solve, convert to k and classify.
SpectrumResult compute_spectrum(const PotentialSpec &spec, int n, double a,
                                int lambda_sign = 1,
                                const ClassifierOptions &options = {});

/// Confirmation size n + ceil(n / 4).
int confirmation_size(int n);

/// Pure selection step: keep |Im k| > tau_im, require a match within
/// delta_match in `confirm_k` (when given), then merge near-duplicates.
std::vector<cdouble> select_discrete(const Eigen::VectorXcd &all_k,
                                     const Eigen::VectorXcd *confirm_k,
                                     const ClassifierOptions &options);

/// Full classifier: runs the confirmation solve at confirmation_size(n) with
/// the same a when options.confirm is set.
std::vector<cdouble> classify_discrete(const Eigen::VectorXcd &all_k, int n,
                                       const PotentialSpec &spec, double a,
                                       int lambda_sign = 1,
                                       const ClassifierOptions &options = {});

struct Eigenfunction {
  cdouble k;
  Eigen::VectorXd x;
  Eigen::VectorXcd psi1;
  Eigen::VectorXcd psi2;
  double residual = 0.0;
};

/// psi1, psi2 at x_j = H^{-1}(chi_j), normalized so |psi1|^2 + |psi2|^2 sums
/// to one, with the largest entry real and positive. `k` must lie within
/// `tolerance` of a computed eigenvalue.
Eigenfunction eigenfunction(const PotentialSpec &spec, int n, double a,
                            int lambda_sign, cdouble k, double tolerance = 1e-4);

enum class PointStatus { Found, Absent, Failed };

struct ConvergenceRecord {
  std::vector<std::pair<double, int>> path;
  /// |k - reference_k| per path point; +inf for failed points.
  std::vector<double> errors;
  std::vector<PointStatus> status;
  cdouble reference_k;
};

/// Error at `reference_k` along a path of (a, n) points. Absent eigenvalues
/// fall back to the distance to the nearest raw eigenvalue. Points run on up
/// to `threads` workers (0: ZS_NUM_THREADS or hardware concurrency).
ConvergenceRecord convergence_study(const PotentialSpec &spec,
                                    const std::vector<std::pair<double, int>> &path,
                                    cdouble reference_k, int lambda_sign = 1,
                                    const ClassifierOptions &options = {},
                                    unsigned threads = 0);

/// Illustrative sweep routes through the (a, n) plane, numbered 1..3.
std::vector<std::pair<double, int>> default_route(int route);

/// Worker cap from ZS_NUM_THREADS, else hardware concurrency (at least 1).
unsigned default_thread_count();

} // namespace zs
