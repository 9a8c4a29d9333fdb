#pragma once

#include "bosonorder/normal_form.hpp"
#include "bosonorder/normal_order.hpp"

namespace bosonorder {

enum class TransformKind { Displacement, Squeeze };

/// Names the scalar symbols of a displacement or squeeze conjugation and
/// owns their conjugation pairings: alpha ↔ alphabar and u ↔ ubar, while
/// c ≙ cosh r and s ≙ sinh r are real. No hyperbolic or phase relations
/// are applied automatically; see reduce_hyperbolic.
class TransformSpec {
 public:
  static TransformSpec displacement(Symbol alpha = Symbol("alpha"),
                                    Symbol alphabar = Symbol("alphabar"));
  static TransformSpec squeeze(Symbol cosh_sym = Symbol("c"),
                               Symbol sinh_sym = Symbol("s"),
                               Symbol phase_sym = Symbol("u"),
                               Symbol phase_conj_sym = Symbol("ubar"));

  TransformKind kind() const { return kind_; }

  const Symbol& alpha() const;
  const Symbol& alphabar() const;
  const Symbol& cosh_sym() const;
  const Symbol& sinh_sym() const;
  const Symbol& phase_sym() const;
  const Symbol& phase_conj_sym() const;

  ConjugationMap conjugations() const;

 private:
  TransformSpec(TransformKind kind, std::vector<Symbol> symbols);
  void require(TransformKind kind) const;

  TransformKind kind_;
  std::vector<Symbol> symbols_;
};

/// The conjugation identities as direct substitutions into the closed
/// forms:
///   D†a^nD  = (a + α)^n,             D†a†^nD = (a† + α*)^n,
///   S†a^nS  = (a·c − a†·u·s)^n,      S†a†^nS = (a†·c − a·ubar·s)^n.
NormalForm conjugate_power(const TransformSpec& spec, Ladder which,
                           unsigned n);

/// Rewrites every coefficient modulo c² = 1 + s² and u·ubar = 1, so the
/// exponent of c is 0 or 1 and u, ubar never co-occur. Opt-in; the engine
/// otherwise treats the squeeze symbols as free.
NormalForm reduce_hyperbolic(const NormalForm& form,
                             const TransformSpec& spec = TransformSpec::squeeze());

}  // namespace bosonorder
