#pragma once

#include <complex>
#include <map>
#include <set>

#include "bosonorder/rational.hpp"
#include "bosonorder/symbol.hpp"

namespace bosonorder {

/// Commuting power product, e.g. x^2*y, as a map symbol -> exponent.
/// Stored exponents are always >= 1; the empty map is the unit monomial.
using Monomial = std::map<Symbol, unsigned>;

/// Exact multivariate polynomial over commuting named symbols with
/// arbitrary-precision rational coefficients. The coefficient ring for all
/// operator expressions. No zero coefficients are stored; the zero
/// polynomial is the empty term map.
class ScalarPoly {
 public:
  ScalarPoly() = default;
  ScalarPoly(int value) : ScalarPoly(Rat(value)) {}
  ScalarPoly(const Rat& value);
  ScalarPoly(const Symbol& sym) : ScalarPoly(variable(sym)) {}

  static ScalarPoly variable(const Symbol& sym);
  static ScalarPoly monomial(const Rat& coeff, const Monomial& mono);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The value of a constant polynomial (zero included).
  Rat constant_value() const;

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  std::set<Symbol> symbols() const;

  ScalarPoly operator-() const;
  ScalarPoly& operator+=(const ScalarPoly& rhs);
  ScalarPoly& operator-=(const ScalarPoly& rhs);
  ScalarPoly& operator*=(const ScalarPoly& rhs);

  friend ScalarPoly operator+(ScalarPoly lhs, const ScalarPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ScalarPoly operator-(ScalarPoly lhs, const ScalarPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ScalarPoly operator*(const ScalarPoly& lhs, const ScalarPoly& rhs);

  ScalarPoly pow(unsigned exponent) const;

  /// Replaces each listed symbol by a polynomial; unlisted symbols stay.
  ScalarPoly substituted(const std::map<Symbol, ScalarPoly>& repl) const;

  /// Renames every symbol to its conjugate partner. Coefficients are
  /// rational, hence untouched.
  ScalarPoly conjugated(const ConjugationMap& conj) const;

  /// Exact evaluation; throws std::invalid_argument on an unbound symbol.
  Rat evaluate(const std::map<Symbol, Rat>& bindings) const;
  std::complex<double> evaluate(
      const std::map<Symbol, std::complex<double>>& bindings) const;

  bool operator==(const ScalarPoly&) const = default;

 private:
  void add_term(const Monomial& mono, const Rat& coeff);

  std::map<Monomial, Rat> terms_;
};

}  // namespace bosonorder
