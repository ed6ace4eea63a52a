#ifndef RESIDUUM_EXPR_PARSE_HPP
#define RESIDUUM_EXPR_PARSE_HPP

#include <string>

#include "residuum/polynomial.hpp"

namespace residuum {

/// Parses arithmetic expressions over one variable into an exact rational
/// function: integer literals, + - * / ^, parentheses. Exponents are integer
/// literals (negative allowed). Examples: "1/z^3", "2/(z-1)^2 + z", "-3/2*z".
RationalFunction parse_rational_function(const std::string& text, const std::string& var);

} // namespace residuum

#endif
