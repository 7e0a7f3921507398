#pragma once

// Shared recursive-descent parser for polynomials and 1-forms.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricdist/polynomial.hpp"

namespace toricdist::detail {

struct ParsedTerm {
  Polynomial coefficient;
  std::optional<std::size_t> differential;
};

struct ParsedExpression {
  std::size_t nvars = 0;
  std::vector<ParsedTerm> terms;
};

// With allow_differentials, tokens like dz12 or dx are read as differentials.
ParsedExpression parse_expression(std::string_view text, const VariableNames& names, bool allow_differentials);

}  // namespace toricdist::detail
