#include "zsspec/discretize.hpp"

#include "zsspec/errors.hpp"
#include "zsspec/io.hpp"

#include <ostream>
#include <string>

namespace zs {

ZSOperator assemble(std::shared_ptr<const ChebyshevBasis> basis, const DomainMap &map,
                    const SampledPotential &pot, int lambda_sign) {
  if (!basis)
    throw InvalidArgument("assemble: null basis");
  if (lambda_sign != 1 && lambda_sign != -1)
    throw InvalidArgument("assemble: lambda_sign must be +1 or -1");
  const int n = basis->n;
  if (pot.n != n || pot.values.size() != n || pot.a != map.a())
    throw InvalidArgument("assemble: potential sampled on (n=" + std::to_string(pot.n) +
                          ", a=" + std::to_string(pot.a) + ") but grid is (n=" +
                          std::to_string(n) + ", a=" + std::to_string(map.a()) + ")");

  Eigen::MatrixXd a1 = basis->node_derivative;
  for (int j = 0; j < n; ++j)
    a1.row(j) *= map.derivative_at_image(basis->nodes[j]);

  ZSOperator op;
  op.n = n;
  op.lambda_sign = lambda_sign;
  op.map = map;
  op.basis = basis;
  op.node_coords.resize(n);
  for (int j = 0; j < n; ++j)
    op.node_coords[j] = map.inverse(basis->nodes[j]);

  op.matrix = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  op.matrix.topLeftCorner(n, n) = -a1.cast<cdouble>();
  op.matrix.bottomRightCorner(n, n) = a1.cast<cdouble>();
  for (int j = 0; j < n; ++j) {
    op.matrix(j, n + j) = pot.values[j];
    op.matrix(n + j, j) = static_cast<double>(lambda_sign) * pot.conjugate_values[j];
  }
  return op;
}

double residual(const ZSOperator &op, cdouble k, const Eigen::VectorXcd &psi) {
  if (psi.size() != op.matrix.cols())
    throw InvalidArgument("residual: psi has length " + std::to_string(psi.size()) +
                          ", operator needs " + std::to_string(op.matrix.cols()));
  const double norm = psi.norm();
  if (norm == 0.0)
    throw InvalidArgument("residual: psi is zero");
  return (op.matrix * psi - mu_from_k(k) * psi).norm() / norm;
}

void write_operator_csv(const ZSOperator &op, std::ostream &out) {
  out << "row,col,re,im\n";
  for (Eigen::Index r = 0; r < op.matrix.rows(); ++r)
    for (Eigen::Index c = 0; c < op.matrix.cols(); ++c) {
      const cdouble v = op.matrix(r, c);
      out << r << ',' << c << ',' << format_double(v.real()) << ','
          << format_double(v.imag()) << '\n';
    }
}

} // namespace zs
