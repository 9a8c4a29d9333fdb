#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bosonorder/operator_expr.hpp"

namespace bosonorder {

/// Syntax error with 1-based position and the set of tokens that would
/// have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::vector<std::string> expected);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// Parses the expression grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*'? factor)*          (juxtaposition multiplies)
///   factor := atom ('^' uint)?
///   atom   := 'a' | 'ad' | symbol | rational | '(' expr ')'
/// where 'ad' denotes a†, whitespace is insignificant, and '-' directly
/// before a numeric literal in atom position signs the literal.
OperatorExpr parse(std::string_view input);

}  // namespace bosonorder
