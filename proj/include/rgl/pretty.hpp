#pragma once

#include <string>

#include "rgl/surface.hpp"

namespace rgl {

// Prints a term in concrete syntax. The output re-parses to a structurally
// identical tree (the round-trip property exercised by the test suite).
std::string pretty(const SPtr& t);

std::string pretty(const Declaration& d);

// Structural equality on surface trees, ignoring spans. Binder names count:
// the printer never renames, so round-tripping preserves them verbatim.
bool alpha_equal_syntax(const SPtr& a, const SPtr& b);
bool decl_equal_syntax(const Declaration& a, const Declaration& b);

} // namespace rgl
