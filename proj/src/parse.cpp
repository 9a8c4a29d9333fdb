#include "bosonorder/parse.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace bosonorder {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += items.size() == 2 ? " or " : ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column, std::vector<std::string> expected)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "parse error at " << line << ":" << column << ": " << message;
        if (!expected.empty()) os << " (expected " << join(expected) << ")";
        return os.str();
      }()),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class TokenKind {
  Ident,
  Number,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  End,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) {}

  Token next() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_])))
      advance();
    const std::size_t line = line_, column = column_;
    if (pos_ >= input_.size()) return {TokenKind::End, "", line, column};

    const char c = input_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (pos_ < input_.size() &&
             (std::isalnum(static_cast<unsigned char>(input_[pos_])) ||
              input_[pos_] == '_')) {
        text += input_[pos_];
        advance();
      }
      return {TokenKind::Ident, std::move(text), line, column};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (pos_ < input_.size() &&
             std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
        text += input_[pos_];
        advance();
      }
      return {TokenKind::Number, std::move(text), line, column};
    }
    advance();
    switch (c) {
      case '+': return {TokenKind::Plus, "+", line, column};
      case '-': return {TokenKind::Minus, "-", line, column};
      case '*': return {TokenKind::Star, "*", line, column};
      case '/': return {TokenKind::Slash, "/", line, column};
      case '^': return {TokenKind::Caret, "^", line, column};
      case '(': return {TokenKind::LParen, "(", line, column};
      case ')': return {TokenKind::RParen, ")", line, column};
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line,
                         column, {});
    }
  }

 private:
  void advance() {
    if (input_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view input_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view input) : lexer_(input) { shift(); }

  OperatorExpr run() {
    OperatorExpr expr = parse_expr();
    if (current_.kind != TokenKind::End)
      fail("unexpected trailing input", {"'+'", "'-'", "end of input"});
    return expr;
  }

 private:
  void shift() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& message,
                         std::vector<std::string> expected) const {
    throw ParseError(message, current_.line, current_.column,
                     std::move(expected));
  }

  bool starts_factor() const {
    switch (current_.kind) {
      case TokenKind::Ident:
      case TokenKind::Number:
      case TokenKind::LParen:
        return true;
      default:
        return false;
    }
  }

  OperatorExpr parse_expr() {
    std::vector<OperatorExpr> terms;
    terms.push_back(parse_term());
    while (current_.kind == TokenKind::Plus ||
           current_.kind == TokenKind::Minus) {
      const bool negate = current_.kind == TokenKind::Minus;
      shift();
      OperatorExpr term = parse_term();
      if (negate)
        term = OperatorExpr::product(
            {OperatorExpr::scalar(ScalarPoly(-1)), std::move(term)});
      terms.push_back(std::move(term));
    }
    if (terms.size() == 1) return std::move(terms.front());
    return OperatorExpr::sum(std::move(terms));
  }

  OperatorExpr parse_term() {
    std::vector<OperatorExpr> factors;
    factors.push_back(parse_factor());
    while (true) {
      if (current_.kind == TokenKind::Star) {
        shift();
        factors.push_back(parse_factor());
      } else if (starts_factor()) {
        factors.push_back(parse_factor());  // juxtaposition
      } else {
        break;
      }
    }
    if (factors.size() == 1) return std::move(factors.front());
    return OperatorExpr::product(std::move(factors));
  }

  OperatorExpr parse_factor() {
    OperatorExpr atom = parse_atom();
    if (current_.kind == TokenKind::Caret) {
      shift();
      if (current_.kind != TokenKind::Number)
        fail("exponents must be nonnegative integers",
             {"nonnegative integer"});
      const unsigned exponent =
          static_cast<unsigned>(std::stoul(current_.text));
      shift();
      return OperatorExpr::power(std::move(atom), exponent);
    }
    return atom;
  }

  OperatorExpr parse_atom() {
    switch (current_.kind) {
      case TokenKind::Ident: {
        const std::string name = current_.text;
        shift();
        if (name == "a") return OperatorExpr::ann();
        if (name == "ad") return OperatorExpr::dag();
        return OperatorExpr::scalar(ScalarPoly::variable(Symbol(name)));
      }
      case TokenKind::Minus: {
        shift();
        if (current_.kind != TokenKind::Number)
          fail("'-' in atom position must sign a numeric literal",
               {"number"});
        return parse_rational(true);
      }
      case TokenKind::Number:
        return parse_rational(false);
      case TokenKind::LParen: {
        shift();
        OperatorExpr inner = parse_expr();
        if (current_.kind != TokenKind::RParen)
          fail("unbalanced parenthesis", {"')'"});
        shift();
        return inner;
      }
      default:
        fail("expected an operand",
             {"'a'", "'ad'", "identifier", "number", "'('"});
    }
  }

  OperatorExpr parse_rational(bool negative) {
    Int num(current_.text);
    shift();
    Int den(1);
    if (current_.kind == TokenKind::Slash) {
      shift();
      if (current_.kind != TokenKind::Number)
        fail("expected a denominator", {"positive integer"});
      den = Int(current_.text);
      if (den == 0) fail("zero denominator", {"positive integer"});
      shift();
    }
    if (negative) num = -num;
    return OperatorExpr::scalar(ScalarPoly(make_rat(num, den)));
  }

  Lexer lexer_;
  Token current_{TokenKind::End, "", 1, 1};
};

}  // namespace

OperatorExpr parse(std::string_view input) { return Parser(input).run(); }

}  // namespace bosonorder
