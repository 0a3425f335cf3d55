#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "singulens/polynomial.hpp"

namespace singulens {

/// Parses a polynomial expression.
///
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := atom ('^' NAT)?
///   atom     := RATIONAL | IDENT | '(' expr ')'
///   RATIONAL := INT ('/' POSINT)?
///
/// A leading sign may open any expression. Whitespace is insignificant, '*' is mandatory between
/// factors. Throws ParseError carrying the 0-based offending position.
Polynomial parse_polynomial(std::string_view text, const RingContext& ring);

/// Comma-separated list of polynomial expressions ("x, y^2, x*z - 1").
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingContext& ring);

/// Canonical text form: terms in descending grevlex order, e.g. "x*y^2*z^2 + x^4 - 3/2*y".
/// parse_polynomial(print(p)) == p.
std::string print(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace singulens
