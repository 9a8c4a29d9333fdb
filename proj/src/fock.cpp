#include "bosonorder/fock.hpp"

#include <cmath>
#include <stdexcept>

#include "bosonorder/closed_forms.hpp"

namespace bosonorder {

RadicalScalar::RadicalScalar(const Rat& rat, const Int& squarefree_radicand)
    : rat_(rat), radicand_(squarefree_radicand) {
  if (radicand_ < 1) throw std::domain_error("RadicalScalar: radicand < 1");
  if (rat_ == 0) radicand_ = 1;
}

RadicalScalar RadicalScalar::sqrt_of(const Int& n) {
  if (n < 0) throw std::domain_error("RadicalScalar: negative radicand");
  if (n == 0) return RadicalScalar();
  Int outer = 1;
  Int rad = n;
  for (Int d = 2; d * d <= rad; ++d) {
    while (rad % (d * d) == 0) {
      rad /= d * d;
      outer *= d;
    }
  }
  return RadicalScalar(Rat(outer), rad);
}

double RadicalScalar::to_double() const {
  return rat_.get_d() * std::sqrt(radicand_.get_d());
}

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
  if (a.is_zero() || b.is_zero()) return RadicalScalar();
  // Squarefree radicands: √d1·√d2 = g·√((d1/g)(d2/g)) with g = gcd(d1, d2),
  // and the cofactors are coprime, so the product radicand stays squarefree.
  Int g;
  mpz_gcd(g.get_mpz_t(), a.radicand_.get_mpz_t(), b.radicand_.get_mpz_t());
  RadicalScalar out;
  out.rat_ = a.rat_ * b.rat_ * Rat(g);
  out.radicand_ = (a.radicand_ / g) * (b.radicand_ / g);
  return out;
}

RadicalScalar operator+(const RadicalScalar& a, const RadicalScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.radicand_ != b.radicand_)
    throw std::domain_error("RadicalScalar: addition across radicands");
  const Rat sum = a.rat_ + b.rat_;
  return sum == 0 ? RadicalScalar() : RadicalScalar(sum, a.radicand_);
}

RadicalSum::RadicalSum(const RadicalScalar& term) { *this += term; }

bool RadicalSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

std::vector<RadicalScalar> RadicalSum::terms() const {
  std::vector<RadicalScalar> out;
  out.reserve(terms_.size());
  for (const auto& [rad, rat] : terms_) out.emplace_back(rat, rad);
  return out;
}

double RadicalSum::to_double() const {
  double out = 0.0;
  for (const auto& [rad, rat] : terms_)
    out += rat.get_d() * std::sqrt(rad.get_d());
  return out;
}

RadicalSum& RadicalSum::operator+=(const RadicalScalar& term) {
  if (term.is_zero()) return *this;
  auto [it, inserted] = terms_.emplace(term.radicand(), term.rat());
  if (!inserted) {
    it->second += term.rat();
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& rhs) {
  for (const auto& [rad, rat] : rhs.terms_) *this += RadicalScalar(rat, rad);
  return *this;
}

RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
  RadicalSum out;
  for (const auto& at : a.terms())
    for (const auto& bt : b.terms()) out += at * bt;
  return out;
}

RadicalSum RadicalSum::divided_by(const RadicalSum& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("RadicalSum: divide by zero");
  if (divisor.terms_.size() > 1)
    throw std::domain_error("RadicalSum: divisor has multiple radical terms");
  const auto& [rad, rat] = *divisor.terms_.begin();
  // 1/(r·√d) = (1/(r·d))·√d.
  const RadicalScalar inverse(Rat(1) / (rat * Rat(rad)), rad);
  return *this * RadicalSum(inverse);
}

FockVector FockVector::basis(unsigned m) {
  FockVector v;
  v.amps_.emplace(m, RadicalSum(Rat(1)));
  return v;
}

RadicalSum FockVector::amplitude(unsigned m) const {
  auto it = amps_.find(m);
  return it == amps_.end() ? RadicalSum() : it->second;
}

void FockVector::add(unsigned m, const RadicalSum& amp) {
  if (amp.is_zero()) return;
  auto [it, inserted] = amps_.emplace(m, amp);
  if (!inserted) {
    it->second += amp;
    if (it->second.is_zero()) amps_.erase(it);
  }
}

FockVector FockVector::scaled(const RadicalSum& factor) const {
  FockVector out;
  for (const auto& [m, amp] : amps_) out.add(m, amp * factor);
  return out;
}

FockVector operator+(const FockVector& a, const FockVector& b) {
  FockVector out = a;
  for (const auto& [m, amp] : b.amps_) out.add(m, amp);
  return out;
}

RadicalScalar normal_word_amplitude(unsigned p, unsigned q, unsigned m) {
  if (q > m)
    throw std::logic_error("normal_word_amplitude: q > m has no amplitude");
  // √(m!(m−q+p)!)/(m−q)! = √(m·…·(m−q+1) · (m−q+p)·…·(m−q+1)), built one
  // √-factor at a time so each radicand stays small and squarefree.
  RadicalScalar amp{Rat(1)};
  for (unsigned i = 0; i < q; ++i)
    amp = amp * RadicalScalar::sqrt_of(Int(m - i));
  const unsigned floor = m - q;
  for (unsigned i = 1; i <= p; ++i)
    amp = amp * RadicalScalar::sqrt_of(Int(floor + i));
  return amp;
}

FockVector apply_normal_word(unsigned p, unsigned q, unsigned m) {
  if (q > m) return FockVector();  // annihilated below vacuum
  FockVector out;
  out.add(m - q + p, RadicalSum(normal_word_amplitude(p, q, m)));
  return out;
}

FockVector apply_antinormal_word(unsigned j, unsigned k, unsigned m) {
  if (j > m + k) return FockVector();
  // (m+k)!/√(m!(m+k−j)!) = √((m+1)·…·(m+k) · (m+k)·…·(m+k−j+1)).
  RadicalScalar amp{Rat(1)};
  for (unsigned i = 1; i <= k; ++i)
    amp = amp * RadicalScalar::sqrt_of(Int(m + i));
  for (unsigned i = 0; i < j; ++i)
    amp = amp * RadicalScalar::sqrt_of(Int(m + k - i));
  FockVector out;
  out.add(m + k - j, RadicalSum(amp));
  return out;
}

FockVector apply_form(const NormalForm& form, const FockVector& state,
                      const std::map<Symbol, Rat>& bindings) {
  std::string missing;
  for (const Symbol& sym : form.symbols()) {
    if (!bindings.contains(sym)) {
      if (!missing.empty()) missing += ", ";
      missing += sym.name;
    }
  }
  if (!missing.empty())
    throw std::invalid_argument("apply_form: unbound symbols: " + missing);

  FockVector out;
  for (const auto& [w, poly] : form.terms()) {
    const Rat c = poly.evaluate(bindings);
    if (c == 0) continue;
    for (const auto& [m, amp] : state.amplitudes()) {
      const FockVector shifted = apply_normal_word(w.dag_power, w.ann_power, m);
      for (const auto& [target, base_amp] : shifted.amplitudes())
        out.add(target, base_amp * amp * RadicalSum(c));
    }
  }
  return out;
}

std::map<unsigned, ScalarPoly> vacuum_expansion(unsigned n, const Symbol& x,
                                                const Symbol& y) {
  if (x == y)
    throw std::invalid_argument("vacuum_expansion: x and y must be distinct");
  std::map<unsigned, ScalarPoly> out;
  const ScalarPoly px = ScalarPoly::variable(x);
  const ScalarPoly py = ScalarPoly::variable(y);
  for (unsigned m = 0; 2 * m <= n; ++m) {
    out.emplace(m, ScalarPoly(vacuum_term_coefficient(n, m)) * px.pow(m) *
                       py.pow(n - m));
  }
  return out;
}

RadicalSum moment(unsigned p, unsigned q, const FockVector& state,
                  bool normalized) {
  if (state.is_zero()) throw std::invalid_argument("moment: zero state");
  RadicalSum acc;
  for (const auto& [m, amp] : state.amplitudes()) {
    if (m < q) continue;
    const unsigned target = m - q + p;
    const RadicalSum target_amp = state.amplitude(target);
    if (target_amp.is_zero()) continue;
    // Amplitudes are real radicals, so conj(amp_target) = amp_target.
    acc += target_amp * amp * RadicalSum(normal_word_amplitude(p, q, m));
  }
  if (normalized) {
    RadicalSum norm2;
    for (const auto& [m, amp] : state.amplitudes()) norm2 += amp * amp;
    acc = acc.divided_by(norm2);
  }
  return acc;
}

}  // namespace bosonorder
