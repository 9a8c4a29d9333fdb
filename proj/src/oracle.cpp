#include "bosonorder/oracle.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace bosonorder {

TruncatedRep::TruncatedRep(unsigned d)
    : dim(d),
      ann(Eigen::MatrixXcd::Zero(d, d)),
      dag(Eigen::MatrixXcd::Zero(d, d)) {
  if (dim == 0) throw std::invalid_argument("TruncatedRep: dim must be >= 1");
  for (unsigned m = 1; m < dim; ++m)
    ann(m - 1, m) = std::sqrt(static_cast<double>(m));
  dag = ann.transpose();
}

unsigned required_dim(unsigned expr_degree, unsigned max_occupation) {
  return max_occupation + expr_degree + 1;
}

Eigen::MatrixXcd evaluate(const OperatorExpr& expr,
                          const ComplexBindings& bindings,
                          const TruncatedRep& rep) {
  using Kind = OperatorExpr::Kind;
  const auto eye = Eigen::MatrixXcd::Identity(rep.dim, rep.dim);
  switch (expr.kind()) {
    case Kind::Ann:
      return rep.ann;
    case Kind::Dag:
      return rep.dag;
    case Kind::Scalar:
      return expr.scalar_value().evaluate(bindings) * eye;
    case Kind::Sum: {
      Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rep.dim, rep.dim);
      for (const auto& child : expr.children())
        out += evaluate(child, bindings, rep);
      return out;
    }
    case Kind::Product: {
      Eigen::MatrixXcd out = eye;
      for (const auto& child : expr.children())
        out = out * evaluate(child, bindings, rep);
      return out;
    }
    case Kind::Power: {
      const Eigen::MatrixXcd base = evaluate(expr.base(), bindings, rep);
      Eigen::MatrixXcd out = eye;
      for (unsigned i = 0; i < expr.exponent(); ++i) out = out * base;
      return out;
    }
  }
  throw std::logic_error("evaluate: unreachable expression kind");
}

Eigen::MatrixXcd evaluate(const NormalForm& form,
                          const ComplexBindings& bindings,
                          const TruncatedRep& rep) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rep.dim, rep.dim);
  for (const auto& [w, coeff] : form.terms()) {
    Eigen::MatrixXcd word = Eigen::MatrixXcd::Identity(rep.dim, rep.dim);
    for (unsigned i = 0; i < w.dag_power; ++i) word = word * rep.dag;
    for (unsigned i = 0; i < w.ann_power; ++i) word = word * rep.ann;
    out += coeff.evaluate(bindings) * word;
  }
  return out;
}

double compare(const NormalForm& nf, const OperatorExpr& expr,
               const ComplexBindings& bindings, unsigned max_occupation,
               unsigned degree) {
  const TruncatedRep rep(required_dim(degree, max_occupation));
  const Eigen::MatrixXcd lhs = evaluate(nf, bindings, rep);
  const Eigen::MatrixXcd rhs = evaluate(expr, bindings, rep);
  const unsigned cols = std::min(rep.dim, max_occupation + 1);
  const unsigned rows = std::min(rep.dim, max_occupation + degree + 1);
  return (lhs - rhs).topLeftCorner(rows, cols).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd squeeze_matrix(double r, double phi, unsigned dim) {
  const TruncatedRep rep(dim);
  const std::complex<double> z = r * std::exp(std::complex<double>(0.0, 2.0 * phi));
  const Eigen::MatrixXcd generator =
      0.5 * (std::conj(z) * rep.ann * rep.ann - z * rep.dag * rep.dag);
  return generator.exp();
}

}  // namespace bosonorder
