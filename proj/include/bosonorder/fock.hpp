#pragma once

#include <map>
#include <vector>

#include "bosonorder/normal_form.hpp"

namespace bosonorder {

/// Exact number r·√d with r rational and d a nonnegative squarefree
/// integer (square factors live in r). Zero is stored as (0, 1).
class RadicalScalar {
 public:
  RadicalScalar() = default;  // zero
  RadicalScalar(const Rat& value) : rat_(value) {}
  RadicalScalar(const Rat& rat, const Int& squarefree_radicand);

  /// √n with the square part extracted into the rational factor; n ≥ 0.
  static RadicalScalar sqrt_of(const Int& n);

  const Rat& rat() const { return rat_; }
  const Int& radicand() const { return radicand_; }
  bool is_zero() const { return rat_ == 0; }
  double to_double() const;

  friend RadicalScalar operator*(const RadicalScalar& a,
                                 const RadicalScalar& b);
  /// Defined only for equal radicands; throws std::domain_error otherwise.
  friend RadicalScalar operator+(const RadicalScalar& a,
                                 const RadicalScalar& b);

  bool operator==(const RadicalScalar&) const = default;

 private:
  Rat rat_ = 0;
  Int radicand_ = 1;
};

/// Finite sum Σ r_i·√d_i with pairwise distinct squarefree radicands;
/// closed under addition and multiplication. Division is exact only by a
/// single-term divisor.
class RadicalSum {
 public:
  RadicalSum() = default;  // zero
  RadicalSum(const Rat& value) : RadicalSum(RadicalScalar(value)) {}
  RadicalSum(const RadicalScalar& term);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  std::vector<RadicalScalar> terms() const;
  double to_double() const;

  RadicalSum& operator+=(const RadicalScalar& term);
  RadicalSum& operator+=(const RadicalSum& rhs);
  friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b);

  /// Exact quotient; throws std::domain_error if the divisor is zero or
  /// has more than one radical term.
  RadicalSum divided_by(const RadicalSum& divisor) const;

  bool operator==(const RadicalSum&) const = default;

 private:
  std::map<Int, Rat> terms_;  // squarefree radicand -> rational factor
};

/// Finitely supported Fock-space vector; no zero amplitudes stored.
class FockVector {
 public:
  FockVector() = default;  // the zero vector

  static FockVector basis(unsigned m);  // |m⟩

  bool is_zero() const { return amps_.empty(); }
  const std::map<unsigned, RadicalSum>& amplitudes() const { return amps_; }
  /// Amplitude on |m⟩; zero if unsupported.
  RadicalSum amplitude(unsigned m) const;

  void add(unsigned m, const RadicalSum& amp);
  FockVector scaled(const RadicalSum& factor) const;

  friend FockVector operator+(const FockVector& a, const FockVector& b);

  bool operator==(const FockVector&) const = default;

 private:
  std::map<unsigned, RadicalSum> amps_;
};

/// √(m!(m−q+p)!)/(m−q)!, the exact amplitude of a†^p a^q on |m⟩.
/// Precondition: q ≤ m.
RadicalScalar normal_word_amplitude(unsigned p, unsigned q, unsigned m);

/// a†^p a^q |m⟩. The zero vector when q > m (annihilating below vacuum),
/// otherwise a single entry at m−q+p.
FockVector apply_normal_word(unsigned p, unsigned q, unsigned m);

/// a^j a†^k |m⟩ = (m+k)!/√(m!(m+k−j)!) |m+k−j⟩; zero when j > m+k.
FockVector apply_antinormal_word(unsigned j, unsigned k, unsigned m);

/// Linear action of a NormalForm on a state with numerically bound
/// scalars. Throws std::invalid_argument listing every unbound symbol.
FockVector apply_form(const NormalForm& form, const FockVector& state,
                      const std::map<Symbol, Rat>& bindings);

/// (ax + a†y)^n |0⟩: entry m carries n!/(m!(n−2m)!2^m)·x^m y^{n−m}, the
/// coefficient on a†^{n−2m}|0⟩. Exactly [n/2]+1 entries.
std::map<unsigned, ScalarPoly> vacuum_expansion(unsigned n, const Symbol& x,
                                                const Symbol& y);

/// ⟨ψ|a†^p a^q|ψ⟩, exact and unnormalized; `normalized` divides by ⟨ψ|ψ⟩.
RadicalSum moment(unsigned p, unsigned q, const FockVector& state,
                  bool normalized = false);

}  // namespace bosonorder
