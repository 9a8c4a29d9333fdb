#include "bosonorder/render.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace bosonorder {

namespace {

std::string rat_text(const Rat& r) { return r.get_str(); }

std::string rat_latex(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  const bool negative = r < 0;
  const Rat mag = negative ? Rat(-r) : r;
  std::string out = negative ? "-" : "";
  out += "\\frac{" + mag.get_num().get_str() + "}{" +
         mag.get_den().get_str() + "}";
  return out;
}

std::string monomial_text(const Monomial& mono) {
  std::string out;
  for (const auto& [sym, exp] : mono) {
    if (!out.empty()) out += " ";
    out += sym.name;
    if (exp > 1) out += "^" + std::to_string(exp);
  }
  return out;
}

std::string monomial_latex(const Monomial& mono) {
  std::string out;
  for (const auto& [sym, exp] : mono) {
    out += sym.name;
    if (exp > 1) out += "^{" + std::to_string(exp) + "}";
  }
  return out;
}

std::string word_text(const NormalWord& w) {
  std::string out;
  if (w.dag_power > 0) {
    out += "ad";
    if (w.dag_power > 1) out += "^" + std::to_string(w.dag_power);
  }
  if (w.ann_power > 0) {
    if (!out.empty()) out += " ";
    out += "a";
    if (w.ann_power > 1) out += "^" + std::to_string(w.ann_power);
  }
  return out;
}

std::string poly_text(const ScalarPoly& poly) {
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : poly.terms()) {
    const bool negative = coeff < 0;
    const Rat mag = negative ? Rat(-coeff) : coeff;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono_str = monomial_text(mono);
    if (mag != 1 || mono_str.empty()) {
      out += rat_text(mag);
      if (!mono_str.empty()) out += " ";
    }
    out += mono_str;
  }
  return out.empty() ? "0" : out;
}

// One rendered term: leading sign plus sign-free body. Multi-term
// coefficient polynomials are parenthesized so the term boundary survives
// a reparse.
struct RenderedTerm {
  bool negative = false;
  std::string body;
};

RenderedTerm term_text(const NormalWord& w, const ScalarPoly& poly) {
  RenderedTerm out;
  const std::string word = word_text(w);
  if (poly.terms().size() > 1) {
    out.body = "(" + poly_text(poly) + ")";
    if (!word.empty()) out.body += " " + word;
    return out;
  }
  const auto& [mono, coeff] = *poly.terms().begin();
  out.negative = coeff < 0;
  const Rat mag = out.negative ? Rat(-coeff) : coeff;
  const std::string mono_str = monomial_text(mono);
  std::string pieces;
  if (mag != 1 || (mono_str.empty() && word.empty())) pieces = rat_text(mag);
  if (!mono_str.empty()) {
    if (!pieces.empty()) pieces += " ";
    pieces += mono_str;
  }
  if (!word.empty()) {
    if (!pieces.empty()) pieces += " ";
    pieces += word;
  }
  out.body = pieces;
  return out;
}

RenderedTerm term_latex(const NormalWord& w, const ScalarPoly& poly) {
  RenderedTerm out;
  const std::string word = latex_word(w.dag_power, w.ann_power);
  if (poly.terms().size() > 1) {
    std::string inner;
    bool first = true;
    for (const auto& [mono, coeff] : poly.terms()) {
      const bool negative = coeff < 0;
      const Rat mag = negative ? Rat(-coeff) : coeff;
      if (first) {
        if (negative) inner += "-";
        first = false;
      } else {
        inner += negative ? "-" : "+";
      }
      const std::string mono_str = monomial_latex(mono);
      if (mag != 1 || mono_str.empty()) inner += rat_latex(mag);
      inner += mono_str;
    }
    out.body = "(" + inner + ")" + word;
    return out;
  }
  const auto& [mono, coeff] = *poly.terms().begin();
  out.negative = coeff < 0;
  const Rat mag = out.negative ? Rat(-coeff) : coeff;
  const std::string mono_str = monomial_latex(mono);
  std::string pieces;
  if (mag != 1 || (mono_str.empty() && word.empty())) pieces = rat_latex(mag);
  pieces += mono_str;
  pieces += word;
  out.body = pieces;
  return out;
}

std::string render_terms(const NormalForm& form, bool latex) {
  if (form.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, poly] : form.terms()) {
    const RenderedTerm term =
        latex ? term_latex(w, poly) : term_text(w, poly);
    if (first) {
      if (term.negative) out += "-";
      first = false;
    } else {
      if (latex)
        out += term.negative ? "-" : "+";
      else
        out += term.negative ? " - " : " + ";
    }
    out += term.body;
  }
  return out;
}

std::string render_json(const NormalForm& form) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [w, poly] : form.terms()) {
    nlohmann::ordered_json term;
    term["p"] = w.dag_power;
    term["q"] = w.ann_power;
    nlohmann::ordered_json coeff = nlohmann::ordered_json::array();
    for (const auto& [mono, c] : poly.terms()) {
      nlohmann::ordered_json entry;
      nlohmann::ordered_json monomial = nlohmann::ordered_json::object();
      for (const auto& [sym, exp] : mono) monomial[sym.name] = exp;
      entry["monomial"] = monomial;
      entry["num"] = c.get_num().get_str();
      entry["den"] = c.get_den().get_str();
      coeff.push_back(entry);
    }
    term["coeff"] = coeff;
    terms.push_back(term);
  }
  return terms.dump();
}

}  // namespace

std::string latex_word(unsigned dag_power, unsigned ann_power) {
  std::string out;
  if (dag_power == 1)
    out += "a^{\\dagger}";
  else if (dag_power > 1)
    out += "a^{\\dagger " + std::to_string(dag_power) + "}";
  if (ann_power == 1)
    out += "a";
  else if (ann_power > 1)
    out += "a^{" + std::to_string(ann_power) + "}";
  return out;
}

std::string render(const NormalForm& form, RenderFormat format) {
  switch (format) {
    case RenderFormat::Text:
      return render_terms(form, false);
    case RenderFormat::Latex:
      return render_terms(form, true);
    case RenderFormat::Json:
      return render_json(form);
  }
  throw std::logic_error("render: unknown format");
}

std::string render(const RadicalSum& value) {
  if (value.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const RadicalScalar& term : value.terms()) {
    const bool negative = term.rat() < 0;
    const Rat mag = negative ? Rat(-term.rat()) : term.rat();
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? "-" : "+";
    }
    out += rat_text(mag);
    if (term.radicand() != 1)
      out += "*sqrt(" + term.radicand().get_str() + ")";
  }
  return out;
}

std::string render(const FockVector& state) {
  if (state.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, amp] : state.amplitudes()) {
    if (!first) out += " + ";
    first = false;
    const std::string amp_str = render(amp);
    const bool needs_parens = amp.terms().size() > 1;
    out += needs_parens ? "(" + amp_str + ")" : amp_str;
    out += "|" + std::to_string(m) + ">";
  }
  return out;
}

RadicalScalar parse_radical(const std::string& text) {
  std::size_t pos = 0;
  const auto fail = [&](const std::string& what) {
    throw std::invalid_argument("invalid amplitude '" + text + "': " + what);
  };
  const auto digits = [&]() -> std::string {
    std::string out;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      out += text[pos++];
    if (out.empty()) fail("expected digits");
    return out;
  };

  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  Int num(digits());
  Int den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = Int(digits());
    if (den == 0) fail("zero denominator");
  }
  Int radicand(1);
  if (pos < text.size()) {
    if (text.compare(pos, 6, "*sqrt(") != 0) fail("expected '*sqrt('");
    pos += 6;
    radicand = Int(digits());
    if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
    ++pos;
  }
  if (pos != text.size()) fail("trailing characters");

  Rat rat = make_rat(num, den);
  if (negative) rat = -rat;
  // Normalize: pull square factors out of the radicand.
  return RadicalScalar(rat) * RadicalScalar::sqrt_of(radicand);
}

}  // namespace bosonorder
