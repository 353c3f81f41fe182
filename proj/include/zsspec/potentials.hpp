#pragma once

#include "zsspec/chebyshev.hpp"
#include "zsspec/mapping.hpp"

#include <Eigen/Dense>

#include <complex>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace zs {

using cdouble = std::complex<double>;

/// Numerically safe sech: 2 e^{-|x|} / (1 + e^{-2|x|}).
double sech(double x);

/// Tabulated potential samples on a strictly increasing x grid. Real and
/// imaginary parts are interpolated separately with monotone (Fritsch-Carlson)
/// cubic Hermite splines.
class TabulatedPotential {
public:
  TabulatedPotential(std::vector<double> x, std::vector<cdouble> values);

  /// Interpolated value for x inside [front, back]; callers handle extrapolation.
  cdouble interpolate(double x) const;

  double front() const { return x_.front(); }
  double back() const { return x_.back(); }
  std::size_t size() const { return x_.size(); }

private:
  std::vector<double> x_;
  std::vector<cdouble> values_;
  std::vector<cdouble> slopes_;
};

/// Reads whitespace-separated "x re [im]" rows; '#' starts a comment.
/// Throws IoError when unreadable and InvalidArgument for an empty or
/// malformed table.
TabulatedPotential read_potential_table(const std::filesystem::path &path);

/// A complex potential q(x) on the real line together with its limits at
/// -infinity and +infinity.
class PotentialSpec {
public:
  enum class Kind { SatsumaYajima, Semiclassical, Solitonic, Custom, Tabulated };

  /// A sech(x).
  static PotentialSpec satsuma_yajima(double amplitude);
  /// sech(2 eps x) exp(i sech(2 eps x) / eps).
  static PotentialSpec semiclassical(double epsilon);
  /// exp(-i x) sech(x).
  static PotentialSpec solitonic();
  /// Any callable. Limits may be left undeclared, in which case sampling on
  /// the mapped grid fails.
  static PotentialSpec custom(std::function<cdouble(double)> fn,
                              std::optional<cdouble> limit_neg,
                              std::optional<cdouble> limit_pos,
                              std::string name = "custom");
  /// Tabulated samples; outside the table the declared limits are used.
  static PotentialSpec tabulated(TabulatedPotential table,
                                 std::optional<cdouble> limit_neg,
                                 std::optional<cdouble> limit_pos,
                                 std::string name = "tabulated");

  Kind kind() const { return kind_; }
  /// Amplitude A for Satsuma-Yajima, epsilon for semiclassical, 0 otherwise.
  double parameter() const { return parameter_; }
  std::optional<cdouble> limit_neg() const { return limit_neg_; }
  std::optional<cdouble> limit_pos() const { return limit_pos_; }

  /// q(x) for finite x. Infinite x returns the declared limit (or throws
  /// InvalidArgument when it is undeclared).
  cdouble evaluate(double x) const;

  /// Short stable descriptor, e.g. "satsuma_yajima(A=1.8)".
  std::string descriptor() const;

  /// Map steepness used when the caller gives none.
  double default_map_steepness() const;

private:
  PotentialSpec() = default;

  Kind kind_ = Kind::Custom;
  double parameter_ = 0.0;
  std::optional<cdouble> limit_neg_;
  std::optional<cdouble> limit_pos_;
  std::function<cdouble(double)> fn_;
  std::shared_ptr<const TabulatedPotential> table_;
  std::string name_;
};

/// q and conj(q) at the mapped nodes x_j = H^{-1}(chi_j).
struct SampledPotential {
  Eigen::VectorXcd values;
  Eigen::VectorXcd conjugate_values;
  int n = 0;
  double a = 0.0;
};

/// Samples `spec` at the mapped Chebyshev nodes. Endpoints take the declared
/// limits; a non-finite sample raises NumericError naming the node.
SampledPotential sample(const PotentialSpec &spec, const ChebyshevBasis &basis,
                        const DomainMap &map);

} // namespace zs
