#pragma once

#include "zsspec/potentials.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <iosfwd>
#include <vector>

namespace zs {

struct EvolutionSetup {
  double half_width = 20.0;
  int m = 512;
  double t_end = 6.0;
  double dt = 1e-3;
  /// Save a frame every `frame_stride` steps (and always the last one).
  int frame_stride = 50;
  PotentialSpec initial = PotentialSpec::satsuma_yajima(1.0);
};

struct EvolutionResult {
  Eigen::VectorXd x;
  std::vector<double> times;
  /// One row per saved time.
  Eigen::MatrixXcd field;
  std::vector<double> mass_series;
};

/// Strang split-step Fourier integration of i q_t + q_xx + 2|q|^2 q = 0 on the
/// periodic interval [-L, L): half nonlinear phase rotation, exact dispersion
/// in Fourier space, half nonlinear rotation. Throws NumericError naming the
/// time at which the field stops being finite.
EvolutionResult evolve(const EvolutionSetup &setup);

/// Same integrator from an explicit initial field on the grid.
EvolutionResult evolve_field(const Eigen::VectorXcd &initial, double half_width,
                             double t_end, double dt, int frame_stride);

/// Periodic rectangle rule for the integral of |q|^2.
double mass(const Eigen::VectorXcd &row, double dx);

/// Counts localized structures in a profile: local maxima of |q| (periodic)
/// at or above `threshold_fraction` * max|q|, accepted tallest first while
/// keeping at least `min_separation` cells from every accepted peak.
int count_structures(const Eigen::VectorXcd &row, double threshold_fraction = 0.25,
                     int min_separation = 8);

/// CSV frames: header "t,re:<x0>,im:<x0>,...", then one row per saved time.
void write_frames_csv(const EvolutionResult &result, std::ostream &out);

/// Binary frames: "ZSEV", uint64 rows, uint64 cols (little-endian), then
/// rows*cols (re, im) float64 pairs in row-major order.
void write_frames_binary(const EvolutionResult &result, std::ostream &out);

/// Reads the binary layout back into a rows x cols matrix.
Eigen::MatrixXcd read_frames_binary(std::istream &in);

} // namespace zs
