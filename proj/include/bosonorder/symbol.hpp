#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

namespace bosonorder {

/// A named commuting scalar; ordering is lexicographic by name.
struct Symbol {
  std::string name;

  explicit Symbol(std::string n) : name(std::move(n)) {
    if (name.empty()) throw std::invalid_argument("Symbol: empty name");
  }

  auto operator<=>(const Symbol&) const = default;
};

/// Registry of conjugate symbol pairs. Symbols without a declared partner
/// are treated as real (self-conjugate).
class ConjugationMap {
 public:
  ConjugationMap() = default;

  void declare(const Symbol& sym, const Symbol& partner) {
    pairs_[sym.name] = partner.name;
    pairs_[partner.name] = sym.name;
  }

  Symbol conjugate(const Symbol& sym) const {
    auto it = pairs_.find(sym.name);
    return it == pairs_.end() ? sym : Symbol(it->second);
  }

 private:
  std::map<std::string, std::string> pairs_;
};

}  // namespace bosonorder
