#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "tbchar/polynomial.hpp"

namespace tbchar {

// Insertion-ordered JSON so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Parses the ASCII polynomial grammar
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := integer ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' positive-integer)?
// with variable names taken from `vars` (x, xp, y for the barred set).
// Whitespace is insignificant.  Throws SyntaxError / UnknownVariable with a
// 0-based position into `text`.
Polynomial parse_polynomial(std::string_view text, VarSet vars = VarSet::barred);

// Canonical text form: terms in the canonical term order, " + " / " - "
// separators, coefficient 1 elided, "*" between factors, "^" for exponents.
// The zero polynomial prints as "0".
std::string to_text(const Polynomial& f);

// Just the variable part, e.g. "x^2*y"; the empty monomial prints as "1".
std::string monomial_text(VarSet vs, const Monomial& m);

// { "vars": ["x","xp","y"], "terms": [ { "coeff": "<decimal>", "exp": [a,b,c] }, ... ] }
// with terms in canonical order and coefficients as decimal strings.
Json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j);

}  // namespace tbchar
