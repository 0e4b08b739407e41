#pragma once

#include <optional>
#include <string_view>

#include "twistkit/exterior.hpp"

namespace twistkit {

/// Parsers for the shared expression grammar.  All printers in the
/// toolkit emit text these functions accept (round-trip property).
///
///   poly   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | ident | ident '^' uint | '(' poly ')'
///   form   := like poly, with extra factors  dIDENT ('^' dIDENT)*
///   mv     := like form, with basis tokens  @IDENT
///
/// "dx1" is a basis token when "x1" is a chart coordinate and "dx1"
/// itself is not; "@x1" is always a basis token.  Errors carry 1-based
/// line and column.
Polynomial parse_polynomial(const Chart& chart, std::string_view text);

/// When `expected_degree` is given, a literal "0" (or any all-zero input)
/// parses as the zero object of that degree, and a nonzero input of a
/// different degree is rejected.
DifferentialForm parse_form(const Chart& chart, std::string_view text,
                            std::optional<int> expected_degree = std::nullopt);
Multivector parse_multivector(const Chart& chart, std::string_view text,
                              std::optional<int> expected_degree = std::nullopt);

}  // namespace twistkit
