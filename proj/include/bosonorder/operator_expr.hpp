#pragma once

#include <set>
#include <vector>

#include "bosonorder/scalar_poly.hpp"

namespace bosonorder {

/// Syntax tree of words in a, a†, scalars, sums, products and integer
/// powers, prior to normal ordering. Products preserve factor order;
/// exponents are nonnegative by construction.
class OperatorExpr {
 public:
  enum class Kind { Ann, Dag, Scalar, Sum, Product, Power };

  static OperatorExpr ann();
  static OperatorExpr dag();
  static OperatorExpr scalar(ScalarPoly value);
  static OperatorExpr sum(std::vector<OperatorExpr> terms);
  static OperatorExpr product(std::vector<OperatorExpr> factors);
  static OperatorExpr power(OperatorExpr base, unsigned exponent);

  Kind kind() const { return kind_; }

  const ScalarPoly& scalar_value() const;            // Kind::Scalar
  const std::vector<OperatorExpr>& children() const;  // Sum / Product
  const OperatorExpr& base() const;                   // Power
  unsigned exponent() const;                          // Power

  /// Number of ladder letters in the longest word the expression expands
  /// to; the degree bound used for truncated-space sizing.
  unsigned degree() const;

  std::set<Symbol> symbols() const;

 private:
  OperatorExpr() = default;

  Kind kind_ = Kind::Scalar;
  ScalarPoly scalar_;
  std::vector<OperatorExpr> children_;  // Power stores its base at [0]
  unsigned exponent_ = 0;
};

}  // namespace bosonorder
