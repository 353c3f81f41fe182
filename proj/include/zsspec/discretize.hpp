#pragma once

#include "zsspec/chebyshev.hpp"
#include "zsspec/mapping.hpp"
#include "zsspec/potentials.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <memory>

namespace zs {

/// Discretized Zakharov-Shabat operator A with A psi = i k psi:
///
///     A = [ -A1              diag(q) ]
///         [ s * diag(conj q)  A1     ]
///
/// where A1 = diag[a (1 - chi_j^2)] * (vandermonde * deriv * transform) and s is
/// the focusing (+1) / defocusing (-1) sign. Unknowns are ordered
/// (psi1 at all nodes, psi2 at all nodes).
struct ZSOperator {
  Eigen::MatrixXcd matrix;
  int n = 0;
  int lambda_sign = 1;
  DomainMap map{1.0};
  std::shared_ptr<const ChebyshevBasis> basis;
  /// x_j = H^{-1}(chi_j); the two endpoints are -inf and +inf.
  Eigen::VectorXd node_coords;
};

ZSOperator assemble(std::shared_ptr<const ChebyshevBasis> basis,
                    const DomainMap &map, const SampledPotential &pot,
                    int lambda_sign = 1);

/// ||A psi - i k psi||_2 / ||psi||_2.
double residual(const ZSOperator &op, cdouble k, const Eigen::VectorXcd &psi);

/// Spectral parameter from an eigenvalue mu of A: k = -i mu.
inline cdouble k_from_mu(cdouble mu) { return cdouble(0.0, -1.0) * mu; }
/// Inverse of k_from_mu: mu = i k.
inline cdouble mu_from_k(cdouble k) { return cdouble(0.0, 1.0) * k; }

/// Writes "row,col,re,im" lines for every matrix entry.
void write_operator_csv(const ZSOperator &op, std::ostream &out);

} // namespace zs
