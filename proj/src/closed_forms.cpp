#include "bosonorder/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bosonorder {

Rat power_term_coefficient(unsigned n, unsigned m, unsigned r) {
  if (2 * m > n) return Rat(0);  // (n−2m)! would be negative
  const unsigned width = n - 2 * m;
  if (r > width) return Rat(0);
  const Rat weight =
      make_rat(factorial(n), factorial(m) * factorial(width) * pow_int(2, m));
  return weight * Rat(binomial(width, r));
}

Rat vacuum_term_coefficient(unsigned n, unsigned m) {
  if (2 * m > n) return Rat(0);
  return make_rat(factorial(n),
                  factorial(m) * factorial(n - 2 * m) * pow_int(2, m));
}

NormalForm expand_power(unsigned n, const ScalarPoly& x, const ScalarPoly& y) {
  NormalForm out;
  for (unsigned m = 0; 2 * m <= n; ++m) {
    const unsigned width = n - 2 * m;
    for (unsigned r = 0; r <= width; ++r) {
      const ScalarPoly coeff = ScalarPoly(power_term_coefficient(n, m, r)) *
                               x.pow(r + m) * y.pow(n - m - r);
      out.add_term({width - r, r}, coeff);
    }
  }
  return out;
}

NormalForm expand_power(unsigned n, const Symbol& x, const Symbol& y) {
  if (x == y)
    throw std::invalid_argument("expand_power: x and y must be distinct");
  return expand_power(n, ScalarPoly::variable(x), ScalarPoly::variable(y));
}

NormalForm ann_dag_product(unsigned j, unsigned k) {
  NormalForm out;
  for (unsigned s = 0; s <= std::min(j, k); ++s)
    out.add_term({k - s, j - s}, ScalarPoly(Rat(ordering_weight(j, k, s))));
  return out;
}

void AntinormalForm::add_term(const AntinormalWord& w, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

AntinormalForm dag_ann_antinormal(unsigned j, unsigned k) {
  AntinormalForm out;
  for (unsigned s = 0; s <= std::min(j, k); ++s) {
    Rat coeff(ordering_weight(j, k, s));
    if (s % 2 == 1) coeff = -coeff;
    out.add_term({k - s, j - s}, coeff);
  }
  return out;
}

OperatorExpr to_operator_expr(const AntinormalForm& form) {
  std::vector<OperatorExpr> terms;
  for (const auto& [w, coeff] : form.terms()) {
    std::vector<OperatorExpr> factors;
    factors.push_back(OperatorExpr::scalar(ScalarPoly(coeff)));
    if (w.ann_power > 0)
      factors.push_back(OperatorExpr::power(OperatorExpr::ann(), w.ann_power));
    if (w.dag_power > 0)
      factors.push_back(OperatorExpr::power(OperatorExpr::dag(), w.dag_power));
    terms.push_back(OperatorExpr::product(std::move(factors)));
  }
  if (terms.empty()) return OperatorExpr::scalar(ScalarPoly(0));
  return OperatorExpr::sum(std::move(terms));
}

HermiteHe hermite_he(unsigned n) {
  HermiteHe he;
  he.degree = n;
  he.coeffs.assign(n + 1, Rat(0));
  for (unsigned m = 0; 2 * m <= n; ++m) {
    Rat c = vacuum_term_coefficient(n, m);
    if (m % 2 == 1) c = -c;
    he.coeffs[n - 2 * m] = c;
  }
  return he;
}

}  // namespace bosonorder
