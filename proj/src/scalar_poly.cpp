#include "bosonorder/scalar_poly.hpp"

#include <stdexcept>
#include <utility>

namespace bosonorder {

ScalarPoly::ScalarPoly(const Rat& value) {
  if (value != 0) terms_.emplace(Monomial{}, value);
}

ScalarPoly ScalarPoly::variable(const Symbol& sym) {
  ScalarPoly p;
  p.terms_.emplace(Monomial{{sym, 1}}, Rat(1));
  return p;
}

ScalarPoly ScalarPoly::monomial(const Rat& coeff, const Monomial& mono) {
  ScalarPoly p;
  p.add_term(mono, coeff);
  return p;
}

bool ScalarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat ScalarPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant())
    throw std::logic_error("ScalarPoly: constant_value of a non-constant");
  return terms_.begin()->second;
}

std::set<Symbol> ScalarPoly::symbols() const {
  std::set<Symbol> out;
  for (const auto& [mono, coeff] : terms_)
    for (const auto& [sym, exp] : mono) out.insert(sym);
  return out;
}

void ScalarPoly::add_term(const Monomial& mono, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ScalarPoly ScalarPoly::operator-() const {
  ScalarPoly out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
  return out;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& rhs) {
  for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, coeff);
  return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& rhs) {
  for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, -coeff);
  return *this;
}

ScalarPoly operator*(const ScalarPoly& lhs, const ScalarPoly& rhs) {
  ScalarPoly out;
  for (const auto& [lm, lc] : lhs.terms_) {
    for (const auto& [rm, rc] : rhs.terms_) {
      Monomial mono = lm;
      for (const auto& [sym, exp] : rm) mono[sym] += exp;
      out.add_term(mono, lc * rc);
    }
  }
  return out;
}

ScalarPoly& ScalarPoly::operator*=(const ScalarPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

ScalarPoly ScalarPoly::pow(unsigned exponent) const {
  ScalarPoly out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= *this;
  return out;
}

ScalarPoly ScalarPoly::substituted(
    const std::map<Symbol, ScalarPoly>& repl) const {
  ScalarPoly out;
  for (const auto& [mono, coeff] : terms_) {
    ScalarPoly term(coeff);
    for (const auto& [sym, exp] : mono) {
      auto it = repl.find(sym);
      const ScalarPoly base = it == repl.end() ? variable(sym) : it->second;
      term *= base.pow(exp);
    }
    out += term;
  }
  return out;
}

ScalarPoly ScalarPoly::conjugated(const ConjugationMap& conj) const {
  ScalarPoly out;
  for (const auto& [mono, coeff] : terms_) {
    Monomial renamed;
    for (const auto& [sym, exp] : mono) renamed[conj.conjugate(sym)] += exp;
    out.add_term(renamed, coeff);
  }
  return out;
}

Rat ScalarPoly::evaluate(const std::map<Symbol, Rat>& bindings) const {
  Rat out(0);
  for (const auto& [mono, coeff] : terms_) {
    Rat term = coeff;
    for (const auto& [sym, exp] : mono) {
      auto it = bindings.find(sym);
      if (it == bindings.end())
        throw std::invalid_argument("unbound symbol: " + sym.name);
      for (unsigned i = 0; i < exp; ++i) term *= it->second;
    }
    out += term;
  }
  return out;
}

std::complex<double> ScalarPoly::evaluate(
    const std::map<Symbol, std::complex<double>>& bindings) const {
  std::complex<double> out = 0.0;
  for (const auto& [mono, coeff] : terms_) {
    std::complex<double> term = coeff.get_d();
    for (const auto& [sym, exp] : mono) {
      auto it = bindings.find(sym);
      if (it == bindings.end())
        throw std::invalid_argument("unbound symbol: " + sym.name);
      for (unsigned i = 0; i < exp; ++i) term *= it->second;
    }
    out += term;
  }
  return out;
}

}  // namespace bosonorder
