#pragma once

#include <map>
#include <set>

#include "bosonorder/scalar_poly.hpp"

namespace bosonorder {

/// A normal-ordered operator word a†^p a^q; (0, 0) is the identity.
struct NormalWord {
  unsigned dag_power = 0;
  unsigned ann_power = 0;

  bool operator==(const NormalWord&) const = default;
};

/// Canonical term order: descending total degree, then descending dagger
/// power. Map iteration is therefore exactly the printed term order.
struct NormalWordOrder {
  bool operator()(const NormalWord& a, const NormalWord& b) const {
    const unsigned ta = a.dag_power + a.ann_power;
    const unsigned tb = b.dag_power + b.ann_power;
    if (ta != tb) return ta > tb;
    return a.dag_power > b.dag_power;
  }
};

/// Canonical form Σ c_pq a†^p a^q with polynomial coefficients. Equality of
/// NormalForms is map equality, which IS semantic operator equality:
/// normal-ordered monomials are linearly independent.
class NormalForm {
 public:
  using TermMap = std::map<NormalWord, ScalarPoly, NormalWordOrder>;

  NormalForm() = default;  // the zero form

  static NormalForm identity() { return word(0, 0); }
  static NormalForm word(unsigned dag_power, unsigned ann_power,
                         ScalarPoly coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of a†^p a^q; the zero polynomial if absent.
  ScalarPoly coefficient(unsigned dag_power, unsigned ann_power) const;

  /// Largest p + q over stored words; 0 for the zero form.
  unsigned degree() const;

  std::set<Symbol> symbols() const;

  /// Accumulates coeff onto the word, dropping the entry if it cancels.
  void add_term(const NormalWord& w, const ScalarPoly& coeff);

  NormalForm scaled(const ScalarPoly& factor) const;

  NormalForm& operator+=(const NormalForm& rhs);

  bool operator==(const NormalForm&) const = default;

 private:
  TermMap terms_;
};

/// Pointwise sum; zero values dropped.
NormalForm nf_add(const NormalForm& lhs, const NormalForm& rhs);
NormalForm nf_sub(const NormalForm& lhs, const NormalForm& rhs);

/// Bilinear product. Adjacent a^j a†^k blocks are reordered through the
/// kernel a^j a†^k = Σ_s j!k!/(s!(j−s)!(k−s)!) a†^{k−s} a^{j−s}.
NormalForm nf_mul(const NormalForm& lhs, const NormalForm& rhs);

/// Hermitian adjoint: words conjugate as (a†^p a^q)† = a†^q a^p and
/// coefficients are symbol-conjugated per the registry.
NormalForm nf_dagger(const NormalForm& f, const ConjugationMap& conj = {});

/// j!k!/(s!(j−s)!(k−s)!), the integer weight of the reordering kernel.
Int ordering_weight(unsigned j, unsigned k, unsigned s);

inline NormalForm operator+(const NormalForm& a, const NormalForm& b) {
  return nf_add(a, b);
}
inline NormalForm operator-(const NormalForm& a, const NormalForm& b) {
  return nf_sub(a, b);
}
inline NormalForm operator*(const NormalForm& a, const NormalForm& b) {
  return nf_mul(a, b);
}

}  // namespace bosonorder
