#include "zsspec/spectrum.hpp"

#include "zsspec/eigensolver.hpp"
#include "zsspec/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

namespace zs {

namespace {

ZSOperator build_operator(const PotentialSpec &spec, int n, double a, int lambda_sign) {
  auto basis = std::make_shared<const ChebyshevBasis>(make_basis(n));
  const DomainMap map(a);
  return assemble(basis, map, sample(spec, *basis, map), lambda_sign);
}

Eigen::VectorXcd operator_k(const ZSOperator &op) {
  const EigenDecomposition eig = eigenvalues(op.matrix, false);
  Eigen::VectorXcd k(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < k.size(); ++i)
    k[i] = k_from_mu(eig.eigenvalues[i]);
  sort_spectral_order(k);
  return k;
}

double nearest_distance(const Eigen::VectorXcd &set, cdouble z) {
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < set.size(); ++i)
    best = std::min(best, std::abs(set[i] - z));
  return best;
}

void check_size(int n) {
  if (n < 8)
    throw InvalidArgument("spectrum needs n >= 8, got " + std::to_string(n));
}

} // namespace

void sort_spectral_order(Eigen::VectorXcd &values) {
  std::vector<cdouble> v(values.data(), values.data() + values.size());
  std::stable_sort(v.begin(), v.end(), [](cdouble x, cdouble y) {
    if (x.imag() != y.imag())
      return x.imag() > y.imag();
    return x.real() < y.real();
  });
  for (Eigen::Index i = 0; i < values.size(); ++i)
    values[i] = v[static_cast<std::size_t>(i)];
}

int confirmation_size(int n) { return n + (n + 3) / 4; }

Eigen::VectorXcd raw_spectrum(const PotentialSpec &spec, int n, double a, int lambda_sign) {
  check_size(n);
  return operator_k(build_operator(spec, n, a, lambda_sign));
}

std::vector<cdouble> select_discrete(const Eigen::VectorXcd &all_k,
                                     const Eigen::VectorXcd *confirm_k,
                                     const ClassifierOptions &options) {
  std::vector<cdouble> kept;
  for (Eigen::Index i = 0; i < all_k.size(); ++i) {
    const cdouble z = all_k[i];
    if (!(std::abs(z.imag()) > options.tau_im))
      continue;
    if (confirm_k && !(nearest_distance(*confirm_k, z) < options.delta_match))
      continue;
    const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](cdouble w) {
      return std::abs(w - z) < options.merge_radius;
    });
    if (!duplicate)
      kept.push_back(z);
  }
  return kept;
}

std::vector<cdouble> classify_discrete(const Eigen::VectorXcd &all_k, int n,
                                       const PotentialSpec &spec, double a, int lambda_sign,
                                       const ClassifierOptions &options) {
  if (!options.confirm)
    return select_discrete(all_k, nullptr, options);
  const Eigen::VectorXcd confirm = raw_spectrum(spec, confirmation_size(n), a, lambda_sign);
  return select_discrete(all_k, &confirm, options);
}

SpectrumResult compute_spectrum(const PotentialSpec &spec, int n, double a, int lambda_sign,
                                const ClassifierOptions &options) {
  check_size(n);
  const ZSOperator op = build_operator(spec, n, a, lambda_sign);

  SpectrumResult result;
  result.params = {"chebyshev", n, a, lambda_sign, spec.descriptor(), options};
  result.all_k = operator_k(op);
  result.discrete_k = classify_discrete(result.all_k, n, spec, a, lambda_sign, options);
  result.residuals.reserve(result.discrete_k.size());
  for (const cdouble k : result.discrete_k) {
    const Eigen::VectorXcd v = eigenvector_for(op.matrix, mu_from_k(k));
    result.residuals.push_back(residual(op, k, v));
  }
  return result;
}

Eigenfunction eigenfunction(const PotentialSpec &spec, int n, double a, int lambda_sign,
                            cdouble k, double tolerance) {
  check_size(n);
  const ZSOperator op = build_operator(spec, n, a, lambda_sign);
  const Eigen::VectorXcd all_k = operator_k(op);
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < all_k.size(); ++i)
    if (std::abs(all_k[i] - k) < std::abs(all_k[best] - k))
      best = i;
  if (!(std::abs(all_k[best] - k) <= tolerance))
    throw InvalidArgument("eigenfunction: no eigenvalue within " + std::to_string(tolerance) +
                          " of k = (" + std::to_string(k.real()) + ", " +
                          std::to_string(k.imag()) + ")");

  Eigenfunction ef;
  ef.k = all_k[best];
  Eigen::VectorXcd v = eigenvector_for(op.matrix, mu_from_k(ef.k));
  Eigen::Index peak = 0;
  v.cwiseAbs().maxCoeff(&peak);
  v *= std::abs(v[peak]) / v[peak];
  v.normalize();
  ef.x = op.node_coords;
  ef.psi1 = v.head(n);
  ef.psi2 = v.tail(n);
  ef.residual = residual(op, ef.k, v);
  return ef;
}

unsigned default_thread_count() {
  if (const char *env = std::getenv("ZS_NUM_THREADS")) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ConvergenceRecord convergence_study(const PotentialSpec &spec,
                                    const std::vector<std::pair<double, int>> &path,
                                    cdouble reference_k, int lambda_sign,
                                    const ClassifierOptions &options, unsigned threads) {
  if (path.empty())
    throw InvalidArgument("convergence_study: empty path");
  ConvergenceRecord rec;
  rec.path = path;
  rec.reference_k = reference_k;
  rec.errors.assign(path.size(), std::numeric_limits<double>::infinity());
  rec.status.assign(path.size(), PointStatus::Failed);

  auto run_point = [&](std::size_t i) {
    const auto [a, n] = path[i];
    try {
      const SpectrumResult r = compute_spectrum(spec, n, a, lambda_sign, options);
      double discrete = std::numeric_limits<double>::infinity();
      for (const cdouble k : r.discrete_k)
        discrete = std::min(discrete, std::abs(k - reference_k));
      const double raw = nearest_distance(r.all_k, reference_k);
      if (std::isfinite(discrete) && discrete <= raw) {
        rec.errors[i] = discrete;
        rec.status[i] = PointStatus::Found;
      } else {
        rec.errors[i] = raw;
        rec.status[i] = PointStatus::Absent;
      }
    } catch (const std::exception &) {
      rec.errors[i] = std::numeric_limits<double>::infinity();
      rec.status[i] = PointStatus::Failed;
    }
  };

  if (threads == 0)
    threads = default_thread_count();
  threads = std::min<unsigned>(threads, static_cast<unsigned>(path.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < path.size(); i = next++)
      run_point(i);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
  }
  return rec;
}

std::vector<std::pair<double, int>> default_route(int route) {
  std::vector<std::pair<double, int>> path;
  for (int i = 0; i <= 10; ++i) {
    const int n = 21 + 23 * i;
    double a = 0.0;
    switch (route) {
    case 1:
      a = 0.15;
      break;
    case 2:
      a = 0.1 + 0.023 * i;
      break;
    case 3:
      a = 0.3;
      break;
    default:
      throw InvalidArgument("route must be 1, 2 or 3");
    }
    path.emplace_back(a, n);
  }
  return path;
}

} // namespace zs
