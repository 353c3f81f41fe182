#include "zsspec/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace zs {

using cdouble = std::complex<double>;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

inline double cabs1(cdouble z) { return std::abs(z.real()) + std::abs(z.imag()); }

void require_finite(const Eigen::MatrixXcd &m, const char *who) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw InvalidArgument(std::string(who) + ": matrix must be square and non-empty");
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        throw InvalidArgument(std::string(who) + ": non-finite entry at (" +
                              std::to_string(i) + ", " + std::to_string(j) + ")");
}

// Rotation G = [c s; -conj(s) c], c real, with G [a; b] = [r; 0].
struct Givens {
  double c = 1.0;
  cdouble s = 0.0;
};

Givens make_givens(cdouble a, cdouble b) {
  const double aa = std::abs(a);
  const double bb = std::abs(b);
  if (bb == 0.0)
    return {1.0, 0.0};
  if (aa == 0.0)
    return {0.0, std::conj(b) / bb};
  const double r = std::hypot(aa, bb);
  return {aa / r, (a / aa) * std::conj(b) / r};
}

// One explicit shifted QR step restricted to the window [lo, hi] of an upper
// Hessenberg matrix: H - s I = Q R, H <- R Q + s I. Only the window is touched.
void shifted_sweep(Eigen::MatrixXcd &h, Eigen::Index lo, Eigen::Index hi, cdouble shift,
                   std::vector<Givens> &rot) {
  rot.resize(static_cast<std::size_t>(hi - lo));
  for (Eigen::Index j = lo; j <= hi; ++j)
    h(j, j) -= shift;
  for (Eigen::Index j = lo; j < hi; ++j) {
    const Givens g = make_givens(h(j, j), h(j + 1, j));
    rot[static_cast<std::size_t>(j - lo)] = g;
    for (Eigen::Index k = j; k <= hi; ++k) {
      const cdouble x = h(j, k);
      const cdouble y = h(j + 1, k);
      h(j, k) = g.c * x + g.s * y;
      h(j + 1, k) = -std::conj(g.s) * x + g.c * y;
    }
    h(j + 1, j) = 0.0;
  }
  for (Eigen::Index j = lo; j < hi; ++j) {
    const Givens g = rot[static_cast<std::size_t>(j - lo)];
    const Eigen::Index last = std::min(j + 1, hi);
    cdouble *cj = &h(0, j);
    cdouble *cj1 = &h(0, j + 1);
    for (Eigen::Index i = lo; i <= last; ++i) {
      const cdouble x = cj[i];
      const cdouble y = cj1[i];
      cj[i] = x * g.c + y * std::conj(g.s);
      cj1[i] = -x * g.s + y * g.c;
    }
  }
  for (Eigen::Index j = lo; j <= hi; ++j)
    h(j, j) += shift;
}

// Eigenvalue of the trailing 2x2 block closest to its bottom-right entry.
cdouble wilkinson_shift(const Eigen::MatrixXcd &h, Eigen::Index hi) {
  const cdouble a = h(hi - 1, hi - 1);
  const cdouble b = h(hi - 1, hi);
  const cdouble c = h(hi, hi - 1);
  const cdouble d = h(hi, hi);
  const cdouble p = 0.5 * (a - d);
  const cdouble bc = b * c;
  const cdouble disc = std::sqrt(p * p + bc);
  const cdouble plus = p + disc;
  const cdouble minus = p - disc;
  const cdouble den = std::abs(plus) >= std::abs(minus) ? plus : minus;
  if (den == cdouble(0.0))
    return d;
  return d - bc / den;
}

void sort_spectrum(Eigen::VectorXcd &values) {
  std::vector<cdouble> v(values.data(), values.data() + values.size());
  std::stable_sort(v.begin(), v.end(), [](cdouble x, cdouble y) {
    if (x.imag() != y.imag())
      return x.imag() > y.imag();
    return x.real() < y.real();
  });
  for (Eigen::Index i = 0; i < values.size(); ++i)
    values[i] = v[static_cast<std::size_t>(i)];
}

} // namespace

bool is_hessenberg(const Eigen::MatrixXcd &m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = j + 2; i < m.rows(); ++i)
      if (m(i, j) != cdouble(0.0))
        return false;
  return true;
}

Eigen::MatrixXcd balance(const Eigen::MatrixXcd &m) {
  constexpr double radix = 2.0;
  constexpr double radix_sq = radix * radix;
  Eigen::MatrixXcd a = m;
  const Eigen::Index n = a.rows();
  bool done = false;
  int sweeps = 0;
  while (!done && sweeps++ < 100) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i)
          continue;
        c += cabs1(a(j, i));
        r += cabs1(a(i, j));
      }
      if (c == 0.0 || r == 0.0)
        continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix_sq;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix_sq;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
  return a;
}

Eigen::MatrixXcd hessenberg(const Eigen::MatrixXcd &m) {
  Eigen::MatrixXcd h = m;
  const Eigen::Index n = h.rows();
  Eigen::VectorXcd v;
  Eigen::RowVectorXcd w;
  Eigen::VectorXcd u;
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const Eigen::Index len = n - k - 1;
    auto x = h.col(k).segment(k + 1, len);
    const double xnorm = x.norm();
    if (xnorm == 0.0)
      continue;
    const cdouble x0 = x[0];
    const cdouble phase = (x0 == cdouble(0.0)) ? cdouble(1.0) : x0 / std::abs(x0);
    const cdouble alpha = -phase * xnorm;
    v = x;
    v[0] -= alpha;
    const double vnorm = v.norm();
    if (vnorm == 0.0)
      continue;
    v /= vnorm;
    // H <- (I - 2 v v^H) H (I - 2 v v^H)
    auto rows = h.block(k + 1, k, len, n - k);
    w.noalias() = v.adjoint() * rows;
    rows.noalias() -= 2.0 * v * w;
    auto cols = h.rightCols(len);
    u.noalias() = cols * v;
    cols.noalias() -= 2.0 * u * v.adjoint();
    h(k + 1, k) = alpha;
    h.col(k).segment(k + 2, len - 1).setZero();
  }
  return h;
}

Eigen::MatrixXcd qr_step(const Eigen::MatrixXcd &h, cdouble shift) {
  if (h.rows() != h.cols())
    throw InvalidArgument("qr_step: matrix must be square");
  if (!is_hessenberg(h))
    throw InvalidArgument("qr_step: matrix is not upper Hessenberg");
  Eigen::MatrixXcd out = h;
  if (out.rows() < 2)
    return out;
  std::vector<Givens> rot;
  shifted_sweep(out, 0, out.rows() - 1, shift, rot);
  return out;
}

EigenDecomposition eigenvalues(const Eigen::MatrixXcd &m, bool want_vectors) {
  require_finite(m, "eigenvalues");
  const Eigen::Index n = m.rows();
  Eigen::MatrixXcd h = hessenberg(balance(m));

  EigenDecomposition out;
  const long cap = 30L * static_cast<long>(n);
  long total = 0;
  std::vector<Givens> rot;
  Eigen::Index hi = n - 1;
  int its = 0;
  while (hi >= 0) {
    Eigen::Index lo = hi;
    while (lo > 0) {
      double tst = cabs1(h(lo - 1, lo - 1)) + cabs1(h(lo, lo));
      if (tst == 0.0) {
        if (lo - 2 >= 0)
          tst += std::abs(h(lo - 1, lo - 2).real());
        if (lo + 1 <= hi)
          tst += std::abs(h(lo + 1, lo).real());
      }
      if (cabs1(h(lo, lo - 1)) <= kEps * tst) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      --hi;
      its = 0;
      continue;
    }
    if (total >= cap) {
      out.eigenvalues = h.diagonal();
      sort_spectrum(out.eigenvalues);
      out.iterations_used = static_cast<int>(total);
      out.converged = false;
      throw NonConvergence("QR iteration did not converge within " + std::to_string(cap) +
                               " steps (" + std::to_string(hi + 1) + " eigenvalues pending)",
                           std::move(out));
    }
    cdouble shift;
    if (its == 10) {
      shift = 0.75 * std::abs(h(lo + 1, lo).real()) + h(lo, lo);
    } else if (its == 20) {
      shift = 0.75 * std::abs(h(hi, hi - 1).real()) + h(hi, hi);
    } else {
      shift = wilkinson_shift(h, hi);
    }
    shifted_sweep(h, lo, hi, shift, rot);
    ++total;
    ++its;
  }

  out.eigenvalues = h.diagonal();
  sort_spectrum(out.eigenvalues);
  out.iterations_used = static_cast<int>(total);
  out.converged = true;
  if (want_vectors) {
    Eigen::MatrixXcd vecs(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
      vecs.col(j) = eigenvector_for(m, out.eigenvalues[j]);
    out.eigenvectors = std::move(vecs);
  }
  return out;
}

Eigen::VectorXcd eigenvector_for(const Eigen::MatrixXcd &m, cdouble mu) {
  require_finite(m, "eigenvector_for");
  const Eigen::Index n = m.rows();
  const double norm = m.norm();
  const double tol = 1e-8 * norm;
  Eigen::VectorXcd start(n);
  for (Eigen::Index j = 0; j < n; ++j)
    start[j] = cdouble(1.0, static_cast<double>(j + 1) / static_cast<double>(n + 1));
  start.normalize();
  if (norm == 0.0)
    return start;

  const cdouble direction(0.6, 0.8);
  double perturbation = 1e-12 * norm;
  for (int attempt = 0; attempt < 8; ++attempt, perturbation *= 10.0) {
    const cdouble sigma = mu + perturbation * direction;
    Eigen::MatrixXcd shifted = m;
    shifted.diagonal().array() -= sigma;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);
    const auto diag = lu.matrixLU().diagonal();
    if ((diag.array().abs() == 0.0).any())
      continue;
    Eigen::VectorXcd v = start;
    bool finite = true;
    for (int it = 0; it < 6; ++it) {
      Eigen::VectorXcd w = lu.solve(v);
      const double wn = w.norm();
      if (!std::isfinite(wn) || wn == 0.0) {
        finite = false;
        break;
      }
      v = w / wn;
      if ((m * v - mu * v).norm() <= tol)
        return v;
    }
    if (!finite)
      continue;
  }
  throw NumericError("eigenvector_for: inverse iteration failed to reach residual " +
                     std::to_string(tol) + " at mu = (" + std::to_string(mu.real()) + ", " +
                     std::to_string(mu.imag()) + ")");
}

} // namespace zs
