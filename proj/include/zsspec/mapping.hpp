#pragma once

namespace zs {

/// H(x) = tanh(a x), a bijection from the real line onto (-1, 1).
class DomainMap {
public:
  explicit DomainMap(double a);

  double a() const { return a_; }

  /// tanh(a x).
  double forward(double x) const;

  /// atanh(chi) / a for |chi| < 1; chi = +-1 returns +-infinity, which
  /// potential sampling reads as "use the declared limit". Throws for |chi| > 1.
  double inverse(double chi) const;

  /// H'(H^{-1}(chi)) = a (1 - chi^2); exactly zero at the endpoints.
  double derivative_at_image(double chi) const;

  friend bool operator==(const DomainMap &, const DomainMap &) = default;

private:
  double a_;
};

} // namespace zs
