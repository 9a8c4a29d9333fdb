#pragma once

#include <string>

namespace bosonorder {

/// LaTeX for the normal-ordered expansions of (ax + a†y)^n, n = 2..7,
/// grouped by the x^i y^j families, followed by the matching vacuum
/// actions. Byte-stable across runs.
std::string paper_tables();

}  // namespace bosonorder
