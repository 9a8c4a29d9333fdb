#include "bosonorder/normal_form.hpp"

#include <algorithm>

namespace bosonorder {

NormalForm NormalForm::word(unsigned dag_power, unsigned ann_power,
                            ScalarPoly coeff) {
  NormalForm f;
  f.add_term({dag_power, ann_power}, coeff);
  return f;
}

ScalarPoly NormalForm::coefficient(unsigned dag_power,
                                   unsigned ann_power) const {
  auto it = terms_.find({dag_power, ann_power});
  return it == terms_.end() ? ScalarPoly() : it->second;
}

unsigned NormalForm::degree() const {
  if (terms_.empty()) return 0;
  const NormalWord& top = terms_.begin()->first;  // ordered by total degree
  return top.dag_power + top.ann_power;
}

std::set<Symbol> NormalForm::symbols() const {
  std::set<Symbol> out;
  for (const auto& [w, coeff] : terms_) {
    auto syms = coeff.symbols();
    out.insert(syms.begin(), syms.end());
  }
  return out;
}

void NormalForm::add_term(const NormalWord& w, const ScalarPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalForm NormalForm::scaled(const ScalarPoly& factor) const {
  NormalForm out;
  for (const auto& [w, coeff] : terms_) out.add_term(w, coeff * factor);
  return out;
}

NormalForm& NormalForm::operator+=(const NormalForm& rhs) {
  for (const auto& [w, coeff] : rhs.terms()) add_term(w, coeff);
  return *this;
}

NormalForm nf_add(const NormalForm& lhs, const NormalForm& rhs) {
  NormalForm out = lhs;
  out += rhs;
  return out;
}

NormalForm nf_sub(const NormalForm& lhs, const NormalForm& rhs) {
  NormalForm out = lhs;
  for (const auto& [w, coeff] : rhs.terms()) out.add_term(w, -coeff);
  return out;
}

Int ordering_weight(unsigned j, unsigned k, unsigned s) {
  return binomial(j, s) * binomial(k, s) * factorial(s);
}

NormalForm nf_mul(const NormalForm& lhs, const NormalForm& rhs) {
  NormalForm out;
  for (const auto& [lw, lc] : lhs.terms()) {
    for (const auto& [rw, rc] : rhs.terms()) {
      const ScalarPoly c = lc * rc;
      // a†^{p1} [a^{q1} a†^{p2}] a^{q2}, bracket expanded by the kernel.
      const unsigned j = lw.ann_power;
      const unsigned k = rw.dag_power;
      for (unsigned s = 0; s <= std::min(j, k); ++s) {
        const NormalWord w{lw.dag_power + (k - s), (j - s) + rw.ann_power};
        out.add_term(w, c * ScalarPoly(Rat(ordering_weight(j, k, s))));
      }
    }
  }
  return out;
}

NormalForm nf_dagger(const NormalForm& f, const ConjugationMap& conj) {
  NormalForm out;
  for (const auto& [w, coeff] : f.terms())
    out.add_term({w.ann_power, w.dag_power}, coeff.conjugated(conj));
  return out;
}

}  // namespace bosonorder
