#pragma once

#include <vector>

#include "bosonorder/normal_form.hpp"
#include "bosonorder/operator_expr.hpp"

namespace bosonorder {

enum class Ladder : unsigned char { Ann, Dag };

/// A scalar-weighted word over {a, a†}, the shape an expression takes
/// after sums, products and powers have been distributed.
struct WeightedWord {
  ScalarPoly coeff;
  std::vector<Ladder> letters;
};

/// Distributes an expression into weighted operator words. Exponential in
/// the expression size; acceptable at desk scale, and the closed forms
/// exist precisely to bypass this path for large powers.
std::vector<WeightedWord> expand_to_words(const OperatorExpr& expr);

/// Normal-orders a single word by leftmost-innermost rewriting of each
/// adjacent pair a·a† → a†·a + 1. Terminates: every swap decreases the
/// count of (a before a†) inversions by one, and the contraction branch
/// shortens the word.
NormalForm order_word(const std::vector<Ladder>& letters);

/// The unique normal-ordered form equal to expr in the algebra.
NormalForm normal_order(const OperatorExpr& expr);

}  // namespace bosonorder
