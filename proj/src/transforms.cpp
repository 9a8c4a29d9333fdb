#include "bosonorder/transforms.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "bosonorder/closed_forms.hpp"

namespace bosonorder {

TransformSpec::TransformSpec(TransformKind kind, std::vector<Symbol> symbols)
    : kind_(kind), symbols_(std::move(symbols)) {
  std::set<Symbol> distinct(symbols_.begin(), symbols_.end());
  if (distinct.size() != symbols_.size())
    throw std::invalid_argument("TransformSpec: symbol names must be distinct");
}

TransformSpec TransformSpec::displacement(Symbol alpha, Symbol alphabar) {
  return TransformSpec(TransformKind::Displacement,
                       {std::move(alpha), std::move(alphabar)});
}

TransformSpec TransformSpec::squeeze(Symbol cosh_sym, Symbol sinh_sym,
                                     Symbol phase_sym, Symbol phase_conj_sym) {
  return TransformSpec(TransformKind::Squeeze,
                       {std::move(cosh_sym), std::move(sinh_sym),
                        std::move(phase_sym), std::move(phase_conj_sym)});
}

void TransformSpec::require(TransformKind kind) const {
  if (kind_ != kind)
    throw std::logic_error("TransformSpec: symbol not part of this transform");
}

const Symbol& TransformSpec::alpha() const {
  require(TransformKind::Displacement);
  return symbols_[0];
}

const Symbol& TransformSpec::alphabar() const {
  require(TransformKind::Displacement);
  return symbols_[1];
}

const Symbol& TransformSpec::cosh_sym() const {
  require(TransformKind::Squeeze);
  return symbols_[0];
}

const Symbol& TransformSpec::sinh_sym() const {
  require(TransformKind::Squeeze);
  return symbols_[1];
}

const Symbol& TransformSpec::phase_sym() const {
  require(TransformKind::Squeeze);
  return symbols_[2];
}

const Symbol& TransformSpec::phase_conj_sym() const {
  require(TransformKind::Squeeze);
  return symbols_[3];
}

ConjugationMap TransformSpec::conjugations() const {
  ConjugationMap conj;
  if (kind_ == TransformKind::Displacement) {
    conj.declare(alpha(), alphabar());
  } else {
    conj.declare(phase_sym(), phase_conj_sym());
    // cosh r and sinh r are real: self-conjugate by omission.
  }
  return conj;
}

namespace {

NormalForm displacement_power(const Symbol& scalar_sym, Ladder which,
                              unsigned n) {
  // α commutes with a, so this is the plain binomial theorem.
  NormalForm out;
  const ScalarPoly alpha = ScalarPoly::variable(scalar_sym);
  for (unsigned r = 0; r <= n; ++r) {
    const ScalarPoly coeff = ScalarPoly(Rat(binomial(n, r))) * alpha.pow(n - r);
    if (which == Ladder::Ann)
      out.add_term({0, r}, coeff);
    else
      out.add_term({r, 0}, coeff);
  }
  return out;
}

}  // namespace

NormalForm conjugate_power(const TransformSpec& spec, Ladder which,
                           unsigned n) {
  if (spec.kind() == TransformKind::Displacement) {
    return displacement_power(
        which == Ladder::Ann ? spec.alpha() : spec.alphabar(), which, n);
  }
  const ScalarPoly c = ScalarPoly::variable(spec.cosh_sym());
  const ScalarPoly s = ScalarPoly::variable(spec.sinh_sym());
  if (which == Ladder::Ann) {
    // S†a^nS = (a·c − a†·u·s)^n
    const ScalarPoly u = ScalarPoly::variable(spec.phase_sym());
    return expand_power(n, c, -(u * s));
  }
  // S†a†^nS = (a†·c − a·ubar·s)^n
  const ScalarPoly ubar = ScalarPoly::variable(spec.phase_conj_sym());
  return expand_power(n, -(ubar * s), c);
}

NormalForm reduce_hyperbolic(const NormalForm& form,
                             const TransformSpec& spec) {
  if (spec.kind() != TransformKind::Squeeze)
    throw std::invalid_argument("reduce_hyperbolic: squeeze registry required");
  const Symbol& c = spec.cosh_sym();
  const Symbol& s = spec.sinh_sym();
  const Symbol& u = spec.phase_sym();
  const Symbol& ubar = spec.phase_conj_sym();
  const ScalarPoly cosh_sq =
      ScalarPoly(1) + ScalarPoly::variable(s) * ScalarPoly::variable(s);

  NormalForm out;
  for (const auto& [w, poly] : form.terms()) {
    ScalarPoly reduced;
    for (const auto& [mono, coeff] : poly.terms()) {
      unsigned c_exp = 0, u_exp = 0, ubar_exp = 0;
      Monomial rest;
      for (const auto& [sym, exp] : mono) {
        if (sym == c)
          c_exp = exp;
        else if (sym == u)
          u_exp = exp;
        else if (sym == ubar)
          ubar_exp = exp;
        else
          rest.emplace(sym, exp);
      }
      ScalarPoly term = ScalarPoly::monomial(coeff, rest);
      if (u_exp > ubar_exp)
        term *= ScalarPoly::variable(u).pow(u_exp - ubar_exp);
      else if (ubar_exp > u_exp)
        term *= ScalarPoly::variable(ubar).pow(ubar_exp - u_exp);
      if (c_exp % 2 == 1) term *= ScalarPoly::variable(c);
      term *= cosh_sq.pow(c_exp / 2);
      reduced += term;
    }
    out.add_term(w, reduced);
  }
  return out;
}

}  // namespace bosonorder
