#include "zsspec/nls.hpp"

#include "zsspec/errors.hpp"
#include "zsspec/io.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <mutex>
#include <numbers>
#include <ostream>
#include <string>

namespace zs {

namespace {

// FFTW planning is not thread-safe; execution on distinct plans is.
std::mutex &planner_mutex() {
  static std::mutex m;
  return m;
}

class FftBuffer {
public:
  explicit FftBuffer(int n) : n_(n), data_(fftw_alloc_complex(static_cast<std::size_t>(n))) {
    if (!data_)
      throw NumericError("fftw_alloc_complex failed");
  }
  ~FftBuffer() { fftw_free(data_); }
  FftBuffer(const FftBuffer &) = delete;
  FftBuffer &operator=(const FftBuffer &) = delete;

  fftw_complex *raw() { return data_; }
  cdouble *begin() { return reinterpret_cast<cdouble *>(data_); }
  cdouble &operator[](int i) { return begin()[i]; }
  int size() const { return n_; }

private:
  int n_;
  fftw_complex *data_;
};

class FftPlan {
public:
  FftPlan(FftBuffer &buf, int sign) {
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(buf.size(), buf.raw(), buf.raw(), sign, FFTW_ESTIMATE);
    if (!plan_)
      throw NumericError("fftw_plan_dft_1d failed");
  }
  ~FftPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  FftPlan(const FftPlan &) = delete;
  FftPlan &operator=(const FftPlan &) = delete;

  void run() { fftw_execute(plan_); }

private:
  fftw_plan plan_ = nullptr;
};

void write_u64(std::ostream &out, std::uint64_t v) {
  unsigned char bytes[8];
  for (int i = 0; i < 8; ++i)
    bytes[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xffu);
  out.write(reinterpret_cast<const char *>(bytes), 8);
}

void write_f64(std::ostream &out, double v) { write_u64(out, std::bit_cast<std::uint64_t>(v)); }

std::uint64_t read_u64(std::istream &in) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char *>(bytes), 8))
    throw IoError("truncated ZSEV stream");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return v;
}

} // namespace

double mass(const Eigen::VectorXcd &row, double dx) { return row.squaredNorm() * dx; }

EvolutionResult evolve_field(const Eigen::VectorXcd &initial, double half_width, double t_end,
                             double dt, int frame_stride) {
  const int m = static_cast<int>(initial.size());
  if (m < 4 || m % 2 != 0)
    throw InvalidArgument("evolve: grid needs an even node count >= 4");
  if (!(half_width > 0.0) || !(t_end > 0.0) || !(dt > 0.0))
    throw InvalidArgument("evolve: L, t_end and dt must be positive");
  if (frame_stride < 1)
    throw InvalidArgument("evolve: frame stride must be >= 1");

  const long steps = std::max(1L, std::lround(t_end / dt));
  const double h = t_end / static_cast<double>(steps);
  const double dx = 2.0 * half_width / m;

  // exp(-i xi^2 h) / m folds the inverse-transform normalization in.
  Eigen::VectorXcd dispersion(m);
  for (int j = 0; j < m; ++j) {
    const int mode = j <= m / 2 ? j : j - m;
    const double xi = std::numbers::pi * mode / half_width;
    dispersion[j] = std::polar(1.0 / m, -xi * xi * h);
  }

  FftBuffer buf(m);
  FftPlan forward(buf, FFTW_FORWARD);
  FftPlan backward(buf, FFTW_BACKWARD);

  EvolutionResult out;
  out.x.resize(m);
  for (int j = 0; j < m; ++j)
    out.x[j] = -half_width + j * dx;

  std::vector<Eigen::VectorXcd> frames;
  Eigen::VectorXcd q = initial;
  auto save = [&](double t) {
    out.times.push_back(t);
    out.mass_series.push_back(mass(q, dx));
    frames.push_back(q);
  };
  save(0.0);

  const double half = 0.5 * h;
  auto nonlinear = [&](cdouble &z) { z *= std::polar(1.0, 2.0 * std::norm(z) * half); };
  for (long s = 1; s <= steps; ++s) {
    for (int j = 0; j < m; ++j) {
      cdouble z = q[j];
      nonlinear(z);
      buf[j] = z;
    }
    forward.run();
    for (int j = 0; j < m; ++j)
      buf[j] *= dispersion[j];
    backward.run();
    bool finite = true;
    for (int j = 0; j < m; ++j) {
      cdouble z = buf[j];
      nonlinear(z);
      q[j] = z;
      finite = finite && std::isfinite(z.real()) && std::isfinite(z.imag());
    }
    const double t = static_cast<double>(s) * h;
    if (!finite)
      throw NumericError("evolve: field became non-finite at t = " + std::to_string(t));
    if (s % frame_stride == 0 || s == steps)
      save(t);
  }

  out.field.resize(static_cast<Eigen::Index>(frames.size()), m);
  for (std::size_t i = 0; i < frames.size(); ++i)
    out.field.row(static_cast<Eigen::Index>(i)) = frames[i].transpose();
  return out;
}

EvolutionResult evolve(const EvolutionSetup &setup) {
  if (setup.m < 4 || setup.m % 2 != 0)
    throw InvalidArgument("evolve: grid needs an even node count >= 4");
  if (!(setup.half_width > 0.0))
    throw InvalidArgument("evolve: half-width must be positive");
  const double dx = 2.0 * setup.half_width / setup.m;
  Eigen::VectorXcd q0(setup.m);
  for (int j = 0; j < setup.m; ++j) {
    const double x = -setup.half_width + j * dx;
    q0[j] = setup.initial.evaluate(x);
    if (!std::isfinite(q0[j].real()) || !std::isfinite(q0[j].imag()))
      throw NumericError("evolve: initial profile is non-finite at x = " + std::to_string(x));
  }
  return evolve_field(q0, setup.half_width, setup.t_end, setup.dt, setup.frame_stride);
}

int count_structures(const Eigen::VectorXcd &row, double threshold_fraction,
                     int min_separation) {
  const int m = static_cast<int>(row.size());
  if (m == 0)
    return 0;
  const Eigen::VectorXd amp = row.cwiseAbs();
  const double peak = amp.maxCoeff();
  if (peak == 0.0)
    return 0;
  std::vector<int> candidates;
  for (int j = 0; j < m; ++j) {
    const double left = amp[(j - 1 + m) % m];
    const double right = amp[(j + 1) % m];
    if (amp[j] >= threshold_fraction * peak && amp[j] >= left && amp[j] >= right)
      candidates.push_back(j);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](int a, int b) { return amp[a] > amp[b]; });
  std::vector<int> accepted;
  for (const int j : candidates) {
    const bool far = std::all_of(accepted.begin(), accepted.end(), [&](int i) {
      const int d = std::abs(i - j);
      return std::min(d, m - d) >= min_separation;
    });
    if (far)
      accepted.push_back(j);
  }
  return static_cast<int>(accepted.size());
}

void write_frames_csv(const EvolutionResult &result, std::ostream &out) {
  out << 't';
  for (Eigen::Index j = 0; j < result.x.size(); ++j) {
    const std::string x = format_double(result.x[j]);
    out << ",re:" << x << ",im:" << x;
  }
  out << '\n';
  for (Eigen::Index r = 0; r < result.field.rows(); ++r) {
    out << format_double(result.times[static_cast<std::size_t>(r)]);
    for (Eigen::Index j = 0; j < result.field.cols(); ++j)
      out << ',' << format_double(result.field(r, j).real()) << ','
          << format_double(result.field(r, j).imag());
    out << '\n';
  }
}

void write_frames_binary(const EvolutionResult &result, std::ostream &out) {
  out.write("ZSEV", 4);
  write_u64(out, static_cast<std::uint64_t>(result.field.rows()));
  write_u64(out, static_cast<std::uint64_t>(result.field.cols()));
  for (Eigen::Index r = 0; r < result.field.rows(); ++r)
    for (Eigen::Index j = 0; j < result.field.cols(); ++j) {
      write_f64(out, result.field(r, j).real());
      write_f64(out, result.field(r, j).imag());
    }
}

Eigen::MatrixXcd read_frames_binary(std::istream &in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, "ZSEV", 4) != 0)
    throw IoError("not a ZSEV stream");
  const auto rows = read_u64(in);
  const auto cols = read_u64(in);
  Eigen::MatrixXcd field(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index r = 0; r < field.rows(); ++r)
    for (Eigen::Index j = 0; j < field.cols(); ++j) {
      const double re = std::bit_cast<double>(read_u64(in));
      const double im = std::bit_cast<double>(read_u64(in));
      field(r, j) = {re, im};
    }
  return field;
}

} // namespace zs
