#include "bosonorder/normal_order.hpp"

namespace bosonorder {

namespace {

std::vector<WeightedWord> convolve(const std::vector<WeightedWord>& lhs,
                                   const std::vector<WeightedWord>& rhs) {
  std::vector<WeightedWord> out;
  out.reserve(lhs.size() * rhs.size());
  for (const auto& l : lhs) {
    for (const auto& r : rhs) {
      ScalarPoly coeff = l.coeff * r.coeff;
      if (coeff.is_zero()) continue;
      std::vector<Ladder> letters = l.letters;
      letters.insert(letters.end(), r.letters.begin(), r.letters.end());
      out.push_back({std::move(coeff), std::move(letters)});
    }
  }
  return out;
}

}  // namespace

std::vector<WeightedWord> expand_to_words(const OperatorExpr& expr) {
  switch (expr.kind()) {
    case OperatorExpr::Kind::Ann:
      return {{ScalarPoly(1), {Ladder::Ann}}};
    case OperatorExpr::Kind::Dag:
      return {{ScalarPoly(1), {Ladder::Dag}}};
    case OperatorExpr::Kind::Scalar: {
      if (expr.scalar_value().is_zero()) return {};
      return {{expr.scalar_value(), {}}};
    }
    case OperatorExpr::Kind::Sum: {
      std::vector<WeightedWord> out;
      for (const auto& child : expr.children()) {
        auto words = expand_to_words(child);
        out.insert(out.end(), std::make_move_iterator(words.begin()),
                   std::make_move_iterator(words.end()));
      }
      return out;
    }
    case OperatorExpr::Kind::Product: {
      std::vector<WeightedWord> out = {{ScalarPoly(1), {}}};
      for (const auto& child : expr.children())
        out = convolve(out, expand_to_words(child));
      return out;
    }
    case OperatorExpr::Kind::Power: {
      std::vector<WeightedWord> out = {{ScalarPoly(1), {}}};
      const auto base = expand_to_words(expr.base());
      for (unsigned i = 0; i < expr.exponent(); ++i) out = convolve(out, base);
      return out;
    }
  }
  return {};
}

NormalForm order_word(const std::vector<Ladder>& letters) {
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    if (letters[i] == Ladder::Ann && letters[i + 1] == Ladder::Dag) {
      // a·a† → a†·a + 1 at the leftmost inversion.
      std::vector<Ladder> swapped = letters;
      swapped[i] = Ladder::Dag;
      swapped[i + 1] = Ladder::Ann;

      std::vector<Ladder> contracted;
      contracted.reserve(letters.size() - 2);
      contracted.insert(contracted.end(), letters.begin(), letters.begin() + i);
      contracted.insert(contracted.end(), letters.begin() + i + 2,
                        letters.end());

      NormalForm out = order_word(swapped);
      out += order_word(contracted);
      return out;
    }
  }
  // No inversion left: all daggers precede all annihilators.
  unsigned dag = 0;
  for (const Ladder l : letters) dag += (l == Ladder::Dag);
  return NormalForm::word(dag, static_cast<unsigned>(letters.size()) - dag);
}

NormalForm normal_order(const OperatorExpr& expr) {
  NormalForm out;
  for (const auto& ww : expand_to_words(expr))
    out += order_word(ww.letters).scaled(ww.coeff);
  return out;
}

}  // namespace bosonorder
