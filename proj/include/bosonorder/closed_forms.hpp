#pragma once

#include <map>
#include <vector>

#include "bosonorder/normal_form.hpp"
#include "bosonorder/operator_expr.hpp"

namespace bosonorder {

/// Coefficient of x^{r+m} y^{n−m−r} a†^{n−2m−r} a^r in the normal-ordered
/// expansion of (ax + a†y)^n: n!/(m!(n−2m)!2^m)·C(n−2m, r). Returns zero
/// whenever a factorial argument would be negative or the binomial is out
/// of range — the 1/(−1)! = 0 convention, applied as an explicit guard.
Rat power_term_coefficient(unsigned n, unsigned m, unsigned r);

/// n!/(m!(n−2m)!2^m), the vacuum-action weight; zero when 2m > n.
Rat vacuum_term_coefficient(unsigned n, unsigned m);

/// Closed-form normal ordering of (a·x + a†·y)^n for distinct symbols.
NormalForm expand_power(unsigned n, const Symbol& x, const Symbol& y);

/// The same expansion with arbitrary commuting scalar slots; used for the
/// squeeze conjugations, where the slots are ±products of symbols.
NormalForm expand_power(unsigned n, const ScalarPoly& x, const ScalarPoly& y);

/// Closed-form normal ordering of a^j a†^k:
/// Σ_s j!k!/(s!(j−s)!(k−s)!) a†^{k−s} a^{j−s}, min(j,k)+1 terms.
NormalForm ann_dag_product(unsigned j, unsigned k);

/// Antinormal word a^j a†^k, annihilators first; (0, 0) is the identity.
struct AntinormalWord {
  unsigned ann_power = 0;
  unsigned dag_power = 0;

  bool operator==(const AntinormalWord&) const = default;
};

struct AntinormalWordOrder {
  bool operator()(const AntinormalWord& a, const AntinormalWord& b) const {
    const unsigned ta = a.ann_power + a.dag_power;
    const unsigned tb = b.ann_power + b.dag_power;
    if (ta != tb) return ta > tb;
    return a.ann_power > b.ann_power;
  }
};

/// Antinormal-ordered form Σ c a^j a†^k with rational coefficients. Kept
/// type-distinct from NormalForm so the two orderings cannot be mixed up.
class AntinormalForm {
 public:
  using TermMap = std::map<AntinormalWord, Rat, AntinormalWordOrder>;

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const AntinormalWord& w, const Rat& coeff);

  bool operator==(const AntinormalForm&) const = default;

 private:
  TermMap terms_;
};

/// Closed-form antinormal ordering of a†^j a^k:
/// Σ_s (−1)^s j!k!/(s!(j−s)!(k−s)!) a^{k−s} a†^{j−s}.
AntinormalForm dag_ann_antinormal(unsigned j, unsigned k);

/// The literal operator expression Σ c·a^j·a†^k of an antinormal form.
OperatorExpr to_operator_expr(const AntinormalForm& form);

/// Probabilists' Hermite polynomial He_n with exact coefficients in the
/// monomial basis; coeffs[i] multiplies t^i.
struct HermiteHe {
  unsigned degree = 0;
  std::vector<Rat> coeffs;
};

/// He_n from the explicit sum n!·Σ_m (−1)^m t^{n−2m}/(m!(n−2m)!2^m).
HermiteHe hermite_he(unsigned n);

}  // namespace bosonorder
