#pragma once

#include "bezout/polynomial.hpp"

#include <string_view>

namespace bezout {

/// Parses the polynomial expression language into expanded normal form.
///
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := factor ('*'? factor)*
///   factor   := base ('^' uint)?
///   base     := rational | var | '(' expr ')'
///   rational := uint ('/' uint)?
///
/// Juxtaposition means multiplication only after ')' or a variable and before
/// '(' or a variable. Throws SyntaxError, UnknownVariable, ExponentOverflow.
Polynomial parse(std::string_view source, const AmbientRing& ambient);

} // namespace bezout
