#pragma once

#include <Eigen/Dense>

#include <complex>

namespace zs {

/// Chebyshev-Gauss-Lobatto collocation basis on [-1, 1].
///
/// Nodes are ascending, nodes[j] = cos((n-1-j)pi/(n-1)), so -1 comes first and
/// +1 last. `vandermonde(j, k) = T_k(nodes[j])` maps coefficients to node values,
/// `transform` is its inverse, and `deriv` acts on coefficient vectors:
/// d/dx [T_0 .. T_{n-1}] = [T_0 .. T_{n-1}] * deriv.
///
/// Immutable once built; share it by const reference or shared_ptr.
struct ChebyshevBasis {
  int n = 0;
  Eigen::VectorXd nodes;
  Eigen::MatrixXd vandermonde;
  Eigen::MatrixXd transform;
  Eigen::MatrixXd deriv;
  /// vandermonde * deriv * transform: node values -> node values of the derivative.
  Eigen::MatrixXd node_derivative;
};

/// Builds the basis for n >= 2 nodes. Warns on stderr for n > 600.
ChebyshevBasis make_basis(int n);

/// T_k(x) by the three-term recurrence.
double eval_poly(int k, double x);

/// Coefficient-space derivative matrix, generated column by column from
/// c'_{k-1} = c'_{k+1} + 2k c_k (the k = 0 row halved).
Eigen::MatrixXd derivative_matrix(int n);

/// transform * values.
Eigen::VectorXcd to_coefficients(const ChebyshevBasis &basis,
                                 const Eigen::VectorXcd &values);

/// Sum_k coeffs[k] T_k(x), evaluated with Clenshaw's recurrence.
std::complex<double> evaluate_series(const Eigen::VectorXcd &coeffs, double x);

} // namespace zs
