#include "zsspec/potentials.hpp"

#include "zsspec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace zs {

double sech(double x) {
  const double e = std::exp(-std::abs(x));
  return 2.0 * e / (1.0 + e * e);
}

namespace {

// Fritsch-Carlson slopes for one real component.
std::vector<double> monotone_slopes(const std::vector<double> &x,
                                    const std::vector<double> &y) {
  const std::size_t n = x.size();
  std::vector<double> m(n, 0.0);
  if (n < 2)
    return m;
  std::vector<double> delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    delta[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
  m[0] = delta[0];
  m[n - 1] = delta[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i)
    m[i] = (delta[i - 1] * delta[i] <= 0.0) ? 0.0 : 0.5 * (delta[i - 1] + delta[i]);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (delta[i] == 0.0) {
      m[i] = 0.0;
      m[i + 1] = 0.0;
      continue;
    }
    const double alpha = m[i] / delta[i];
    const double beta = m[i + 1] / delta[i];
    const double s = alpha * alpha + beta * beta;
    if (s > 9.0) {
      const double tau = 3.0 / std::sqrt(s);
      m[i] = tau * alpha * delta[i];
      m[i + 1] = tau * beta * delta[i];
    }
  }
  return m;
}

bool parse_complex(const std::string &text, cdouble &out) {
  std::istringstream in(text);
  double re = 0.0;
  double im = 0.0;
  if (!(in >> re))
    return false;
  if (in >> im) {
    out = {re, im};
  } else {
    out = {re, 0.0};
  }
  return true;
}

} // namespace

TabulatedPotential::TabulatedPotential(std::vector<double> x, std::vector<cdouble> values)
    : x_(std::move(x)), values_(std::move(values)) {
  if (x_.empty())
    throw InvalidArgument("potential table is empty");
  if (x_.size() != values_.size())
    throw InvalidArgument("potential table: x and q lengths differ");
  for (std::size_t i = 0; i + 1 < x_.size(); ++i)
    if (!(x_[i + 1] > x_[i]))
      throw InvalidArgument("potential table: x must be strictly increasing");
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (!std::isfinite(x_[i]) || !std::isfinite(values_[i].real()) ||
        !std::isfinite(values_[i].imag()))
      throw InvalidArgument("potential table: non-finite entry in row " + std::to_string(i));

  std::vector<double> re(values_.size());
  std::vector<double> im(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    re[i] = values_[i].real();
    im[i] = values_[i].imag();
  }
  const auto sr = monotone_slopes(x_, re);
  const auto si = monotone_slopes(x_, im);
  slopes_.resize(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    slopes_[i] = {sr[i], si[i]};
}

cdouble TabulatedPotential::interpolate(double x) const {
  if (x_.size() == 1 || x <= x_.front())
    return values_.front();
  if (x >= x_.back())
    return values_.back();
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * values_[i] + h10 * h * slopes_[i] + h01 * values_[i + 1] +
         h11 * h * slopes_[i + 1];
}

TabulatedPotential read_potential_table(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open potential table " + path.string());
  std::vector<double> xs;
  std::vector<cdouble> qs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    double x = 0.0;
    if (!(fields >> x)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw InvalidArgument(path.string() + ":" + std::to_string(lineno) +
                              ": expected 'x re [im]'");
      continue;
    }
    std::string rest;
    std::getline(fields, rest);
    cdouble q;
    if (!parse_complex(rest, q))
      throw InvalidArgument(path.string() + ":" + std::to_string(lineno) +
                            ": expected 'x re [im]'");
    xs.push_back(x);
    qs.push_back(q);
  }
  if (xs.empty())
    throw InvalidArgument("potential table " + path.string() + " has no rows");
  return TabulatedPotential(std::move(xs), std::move(qs));
}

PotentialSpec PotentialSpec::satsuma_yajima(double amplitude) {
  if (!(amplitude > 0.0))
    throw InvalidArgument("Satsuma-Yajima amplitude must be positive");
  PotentialSpec p;
  p.kind_ = Kind::SatsumaYajima;
  p.parameter_ = amplitude;
  p.limit_neg_ = 0.0;
  p.limit_pos_ = 0.0;
  return p;
}

PotentialSpec PotentialSpec::semiclassical(double epsilon) {
  if (!(epsilon > 0.0))
    throw InvalidArgument("semiclassical epsilon must be positive");
  PotentialSpec p;
  p.kind_ = Kind::Semiclassical;
  p.parameter_ = epsilon;
  p.limit_neg_ = 0.0;
  p.limit_pos_ = 0.0;
  return p;
}

PotentialSpec PotentialSpec::solitonic() {
  PotentialSpec p;
  p.kind_ = Kind::Solitonic;
  p.limit_neg_ = 0.0;
  p.limit_pos_ = 0.0;
  return p;
}

PotentialSpec PotentialSpec::custom(std::function<cdouble(double)> fn,
                                    std::optional<cdouble> limit_neg,
                                    std::optional<cdouble> limit_pos, std::string name) {
  if (!fn)
    throw InvalidArgument("custom potential needs a callable");
  PotentialSpec p;
  p.kind_ = Kind::Custom;
  p.fn_ = std::move(fn);
  p.limit_neg_ = limit_neg;
  p.limit_pos_ = limit_pos;
  p.name_ = std::move(name);
  return p;
}

PotentialSpec PotentialSpec::tabulated(TabulatedPotential table,
                                       std::optional<cdouble> limit_neg,
                                       std::optional<cdouble> limit_pos, std::string name) {
  PotentialSpec p;
  p.kind_ = Kind::Tabulated;
  p.table_ = std::make_shared<const TabulatedPotential>(std::move(table));
  p.limit_neg_ = limit_neg;
  p.limit_pos_ = limit_pos;
  p.name_ = std::move(name);
  return p;
}

cdouble PotentialSpec::evaluate(double x) const {
  if (std::isinf(x)) {
    const auto &limit = x < 0 ? limit_neg_ : limit_pos_;
    if (!limit)
      throw InvalidArgument(descriptor() + ": limit at " + (x < 0 ? "-inf" : "+inf") +
                            " is not declared");
    return *limit;
  }
  switch (kind_) {
  case Kind::SatsumaYajima:
    return parameter_ * sech(x);
  case Kind::Semiclassical: {
    const double s = sech(2.0 * parameter_ * x);
    return s * std::polar(1.0, s / parameter_);
  }
  case Kind::Solitonic:
    return std::polar(sech(x), -x);
  case Kind::Custom:
    return fn_(x);
  case Kind::Tabulated:
    if (x < table_->front()) {
      if (!limit_neg_)
        throw InvalidArgument(descriptor() + ": x below the table needs a declared limit");
      return *limit_neg_;
    }
    if (x > table_->back()) {
      if (!limit_pos_)
        throw InvalidArgument(descriptor() + ": x above the table needs a declared limit");
      return *limit_pos_;
    }
    return table_->interpolate(x);
  }
  return 0.0;
}

std::string PotentialSpec::descriptor() const {
  std::ostringstream s;
  s.precision(17);
  switch (kind_) {
  case Kind::SatsumaYajima:
    s << "satsuma_yajima(A=" << parameter_ << ")";
    break;
  case Kind::Semiclassical:
    s << "semiclassical(epsilon=" << parameter_ << ")";
    break;
  case Kind::Solitonic:
    s << "solitonic";
    break;
  case Kind::Custom:
  case Kind::Tabulated:
    s << name_;
    break;
  }
  return s.str();
}

double PotentialSpec::default_map_steepness() const {
  switch (kind_) {
  case Kind::SatsumaYajima:
    return 0.15;
  case Kind::Semiclassical:
    return 0.01;
  case Kind::Solitonic:
    return 0.1;
  default:
    return 0.1;
  }
}

SampledPotential sample(const PotentialSpec &spec, const ChebyshevBasis &basis,
                        const DomainMap &map) {
  const int n = basis.n;
  if (!spec.limit_neg() || !spec.limit_pos())
    throw InvalidArgument(spec.descriptor() +
                          ": sampling on the mapped grid needs both limits at +-inf");
  SampledPotential s;
  s.n = n;
  s.a = map.a();
  s.values.resize(n);
  s.values[0] = *spec.limit_neg();
  s.values[n - 1] = *spec.limit_pos();
  for (int j = 1; j + 1 < n; ++j) {
    const cdouble q = spec.evaluate(map.inverse(basis.nodes[j]));
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag()))
      throw NumericError(spec.descriptor() + ": non-finite potential value at node " +
                         std::to_string(j));
    s.values[j] = q;
  }
  s.conjugate_values = s.values.conjugate();
  return s;
}

} // namespace zs
