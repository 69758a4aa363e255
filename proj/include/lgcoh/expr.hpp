#pragma once

#include "lgcoh/homalg.hpp"

#include <string>

namespace lgcoh {

/// Parses a bundle expression at rank n. Grammar:
///   expr   := term ('+' term)*
///   term   := atom ('*' atom)*
///   atom   := 'S(a1,...,ak)' (implied trailing zeros) | 'wedge^k' | 'O(i)' | 'O' | 'Q'
/// Products are expanded through the Littlewood-Richardson rule.
BundleExpr parse_bundle_expr(const std::string& text, int n);

}  // namespace lgcoh
