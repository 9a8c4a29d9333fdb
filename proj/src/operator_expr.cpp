#include "bosonorder/operator_expr.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bosonorder {

OperatorExpr OperatorExpr::ann() {
  OperatorExpr e;
  e.kind_ = Kind::Ann;
  return e;
}

OperatorExpr OperatorExpr::dag() {
  OperatorExpr e;
  e.kind_ = Kind::Dag;
  return e;
}

OperatorExpr OperatorExpr::scalar(ScalarPoly value) {
  OperatorExpr e;
  e.kind_ = Kind::Scalar;
  e.scalar_ = std::move(value);
  return e;
}

OperatorExpr OperatorExpr::sum(std::vector<OperatorExpr> terms) {
  OperatorExpr e;
  e.kind_ = Kind::Sum;
  e.children_ = std::move(terms);
  return e;
}

OperatorExpr OperatorExpr::product(std::vector<OperatorExpr> factors) {
  OperatorExpr e;
  e.kind_ = Kind::Product;
  e.children_ = std::move(factors);
  return e;
}

OperatorExpr OperatorExpr::power(OperatorExpr base, unsigned exponent) {
  OperatorExpr e;
  e.kind_ = Kind::Power;
  e.children_.push_back(std::move(base));
  e.exponent_ = exponent;
  return e;
}

const ScalarPoly& OperatorExpr::scalar_value() const {
  if (kind_ != Kind::Scalar)
    throw std::logic_error("OperatorExpr: not a scalar node");
  return scalar_;
}

const std::vector<OperatorExpr>& OperatorExpr::children() const {
  if (kind_ != Kind::Sum && kind_ != Kind::Product)
    throw std::logic_error("OperatorExpr: node has no child list");
  return children_;
}

const OperatorExpr& OperatorExpr::base() const {
  if (kind_ != Kind::Power)
    throw std::logic_error("OperatorExpr: not a power node");
  return children_[0];
}

unsigned OperatorExpr::exponent() const {
  if (kind_ != Kind::Power)
    throw std::logic_error("OperatorExpr: not a power node");
  return exponent_;
}

unsigned OperatorExpr::degree() const {
  switch (kind_) {
    case Kind::Ann:
    case Kind::Dag:
      return 1;
    case Kind::Scalar:
      return 0;
    case Kind::Sum: {
      unsigned d = 0;
      for (const auto& c : children_) d = std::max(d, c.degree());
      return d;
    }
    case Kind::Product: {
      unsigned d = 0;
      for (const auto& c : children_) d += c.degree();
      return d;
    }
    case Kind::Power:
      return exponent_ * children_[0].degree();
  }
  return 0;
}

std::set<Symbol> OperatorExpr::symbols() const {
  std::set<Symbol> out;
  if (kind_ == Kind::Scalar) return scalar_.symbols();
  for (const auto& c : children_) {
    auto syms = c.symbols();
    out.insert(syms.begin(), syms.end());
  }
  return out;
}

}  // namespace bosonorder
