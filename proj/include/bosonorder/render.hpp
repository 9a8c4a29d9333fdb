#pragma once

#include <string>

#include "bosonorder/fock.hpp"
#include "bosonorder/normal_form.hpp"

namespace bosonorder {

enum class RenderFormat { Text, Latex, Json };

/// Deterministic rendering of a normal form: terms in descending (p+q),
/// then descending p; monomials in canonical symbol order. Text output
/// parses back through the expression grammar ('ad' for a†); JSON
/// serializes big integers as decimal strings. The empty form prints "0".
std::string render(const NormalForm& form, RenderFormat format);

/// a†^p a^q in the display style `a^{\dagger 2}a^{2}`.
std::string latex_word(unsigned dag_power, unsigned ann_power);

/// e.g. "3", "-1/2*sqrt(2)", "3-1*sqrt(2)"; zero prints "0".
std::string render(const RadicalSum& value);

/// e.g. "6|4>", "1|0> + 1*sqrt(2)|2>"; the zero vector prints "0".
std::string render(const FockVector& state);

/// Parses a single amplitude term "rat[*sqrt(d)]", e.g. "-3/4*sqrt(2)".
RadicalScalar parse_radical(const std::string& text);

}  // namespace bosonorder
