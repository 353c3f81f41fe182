#include "zsspec/mapping.hpp"

#include "zsspec/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace zs {

DomainMap::DomainMap(double a) : a_(a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw InvalidArgument("map steepness a must be positive and finite, got " +
                          std::to_string(a));
}

double DomainMap::forward(double x) const { return std::tanh(a_ * x); }

double DomainMap::inverse(double chi) const {
  if (!(std::abs(chi) <= 1.0))
    throw InvalidArgument("inverse map: |chi| > 1 (" + std::to_string(chi) + ")");
  if (chi == 1.0)
    return std::numeric_limits<double>::infinity();
  if (chi == -1.0)
    return -std::numeric_limits<double>::infinity();
  return std::atanh(chi) / a_;
}

double DomainMap::derivative_at_image(double chi) const {
  if (!(std::abs(chi) <= 1.0))
    throw InvalidArgument("map derivative: |chi| > 1 (" + std::to_string(chi) + ")");
  return a_ * (1.0 - chi * chi);
}

} // namespace zs
