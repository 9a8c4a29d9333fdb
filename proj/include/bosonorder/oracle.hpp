#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>

#include "bosonorder/normal_form.hpp"
#include "bosonorder/operator_expr.hpp"

namespace bosonorder {

using ComplexBindings = std::map<Symbol, std::complex<double>>;

/// a and a† as dense matrices on the D-dimensional truncated Fock space:
/// ann(m−1, m) = √m, dag its transpose. [a, a†] equals the identity on the
/// leading (D−1)×(D−1) block; the bottom-right entry is the truncation
/// artifact.
struct TruncatedRep {
  explicit TruncatedRep(unsigned dim);

  unsigned dim;
  Eigen::MatrixXcd ann;
  Eigen::MatrixXcd dag;
};

/// Smallest dimension on which any word of total length ≤ expr_degree acts
/// without truncation leakage on states supported at or below
/// max_occupation: max_occupation + expr_degree + 1.
unsigned required_dim(unsigned expr_degree, unsigned max_occupation);

/// Structural evaluation of an expression (sums → matrix sums, products →
/// matrix products, powers → repeated multiplication).
Eigen::MatrixXcd evaluate(const OperatorExpr& expr,
                          const ComplexBindings& bindings,
                          const TruncatedRep& rep);

/// Σ c_pq(bindings) · dag^p · ann^q.
Eigen::MatrixXcd evaluate(const NormalForm& form,
                          const ComplexBindings& bindings,
                          const TruncatedRep& rep);

/// Max absolute elementwise deviation between the two evaluations on the
/// exact block: columns ≤ max_occupation, rows ≤ max_occupation + degree.
/// The representation is built at required_dim(degree, max_occupation).
double compare(const NormalForm& nf, const OperatorExpr& expr,
               const ComplexBindings& bindings, unsigned max_occupation,
               unsigned degree);

/// S(z) = exp((z̄·a² − z·a†²)/2) with z = r·e^{2iφ}, as a dim×dim matrix.
/// Not degree-bounded; callers inflate dim well past the comparison block.
Eigen::MatrixXcd squeeze_matrix(double r, double phi, unsigned dim);

}  // namespace bosonorder
