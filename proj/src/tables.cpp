#include "bosonorder/tables.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "bosonorder/closed_forms.hpp"
#include "bosonorder/fock.hpp"
#include "bosonorder/render.hpp"

namespace bosonorder {

namespace {

std::string family_monomial(unsigned x_exp, unsigned y_exp) {
  std::string out;
  if (x_exp == 1)
    out += "x";
  else if (x_exp > 1)
    out += "x^{" + std::to_string(x_exp) + "}";
  if (y_exp == 1)
    out += "y";
  else if (y_exp > 1)
    out += "y^{" + std::to_string(y_exp) + "}";
  return out;
}

Int integer_coefficient(const Rat& r) {
  if (r.get_den() != 1)
    throw std::logic_error("paper_tables: expected an integer coefficient");
  return r.get_num();
}

std::string expansion_line(unsigned n, const Symbol& x, const Symbol& y) {
  const NormalForm form = expand_power(n, x, y);

  // Group terms by x-degree; within a family the map order is already the
  // display order (descending p+q, then descending p).
  std::map<unsigned, std::vector<std::pair<NormalWord, Int>>, std::greater<>>
      families;
  for (const auto& [w, poly] : form.terms()) {
    const auto& [mono, coeff] = *poly.terms().begin();
    auto it = mono.find(x);
    const unsigned x_exp = it == mono.end() ? 0 : it->second;
    families[x_exp].emplace_back(w, integer_coefficient(coeff));
  }

  std::ostringstream os;
  os << "(ax+a^{\\dagger}y)^{" << n << "} = ";
  bool first_family = true;
  for (const auto& [x_exp, words] : families) {
    if (!first_family) os << "+";
    first_family = false;
    os << family_monomial(x_exp, n - x_exp);
    if (words.size() == 1 && words.front().second == 1) {
      os << latex_word(words.front().first.dag_power,
                       words.front().first.ann_power);
      continue;
    }
    os << "(";
    bool first_word = true;
    for (const auto& [w, coeff] : words) {
      if (!first_word) os << "+";
      first_word = false;
      if (coeff != 1) os << coeff.get_str();
      os << latex_word(w.dag_power, w.ann_power);
    }
    os << ")";
  }
  return os.str();
}

std::string vacuum_line(unsigned n, const Symbol& x, const Symbol& y) {
  const auto expansion = vacuum_expansion(n, x, y);

  std::ostringstream os;
  os << "(ax+a^{\\dagger}y)^{" << n << "}\\ket{0} = (";
  bool first = true;
  // Descending m: ascending a† power, the order the vacuum forms display.
  for (auto it = expansion.rbegin(); it != expansion.rend(); ++it) {
    const unsigned m = it->first;
    if (!first) os << "+";
    first = false;
    const Int coeff = integer_coefficient(vacuum_term_coefficient(n, m));
    if (coeff != 1) os << coeff.get_str();
    os << family_monomial(m, n - m);
    os << latex_word(n - 2 * m, 0);
  }
  os << ")\\ket{0}";
  return os.str();
}

}  // namespace

std::string paper_tables() {
  const Symbol x("x"), y("y");
  std::ostringstream os;
  os << "% Normal-ordered expansions of (ax + a^dagger y)^n, n = 2..7\n";
  for (unsigned n = 2; n <= 7; ++n) os << expansion_line(n, x, y) << "\n";
  os << "\n";
  os << "% Vacuum actions (ax + a^dagger y)^n |0>, n = 2..7\n";
  for (unsigned n = 2; n <= 7; ++n) os << vacuum_line(n, x, y) << "\n";
  return os.str();
}

}  // namespace bosonorder
