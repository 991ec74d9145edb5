#include "tbchar/poly_io.hpp"

#include <cctype>
#include <cstddef>

namespace tbchar {

namespace {

struct Parser {
  std::string_view text;
  VarSet vars;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return text[pos];
  }

  bool peek_is(char c) { return !at_end() && peek() == c; }

  Int parse_integer() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw SyntaxError("expected an integer", start);
    return Int(std::string(text.substr(start, pos - start)), 10);
  }

  // factor := var ('^' positive-integer)?
  void parse_factor(Monomial& m) {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) throw SyntaxError("expected a variable name", start);
    const std::string name(text.substr(start, pos - start));
    const auto& names = var_names(vars);
    int var = -1;
    for (int v = 0; v < 3; ++v)
      if (names[v] == name) var = v;
    if (var < 0) throw UnknownVariable(name, start);

    int exponent = 1;
    if (peek_is('^')) {
      ++pos;
      skip_ws();
      const std::size_t estart = pos;
      const Int e = parse_integer();
      if (e <= 0 || e > 100000)
        throw SyntaxError("exponent must be a small positive integer", estart);
      exponent = static_cast<int>(e.get_si());
    }
    m.exp[var] += exponent;
  }

  // term := integer ('*' factor)* | factor ('*' factor)*
  void parse_term(Polynomial& out, int sign) {
    skip_ws();
    if (pos >= text.size()) throw SyntaxError("expected a term", pos);
    Int coeff = 1;
    Monomial m;
    if (std::isdigit(static_cast<unsigned char>(text[pos])))
      coeff = parse_integer();
    else
      parse_factor(m);
    while (peek_is('*')) {
      ++pos;
      parse_factor(m);
    }
    out.add_term(m, sign * coeff);
  }

  Polynomial parse() {
    Polynomial out(vars);
    skip_ws();
    if (pos >= text.size()) throw SyntaxError("empty input", pos);
    int sign = 1;
    if (text[pos] == '-') {
      sign = -1;
      ++pos;
    }
    parse_term(out, sign);
    while (!at_end()) {
      const char c = peek();
      if (c == '+')
        sign = 1;
      else if (c == '-')
        sign = -1;
      else
        throw SyntaxError("expected '+' or '-'", pos);
      ++pos;
      parse_term(out, sign);
    }
    return out;
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, VarSet vars) {
  Parser parser{text, vars};
  return parser.parse();
}

std::string monomial_text(VarSet vs, const Monomial& m) {
  const auto& names = var_names(vs);
  std::string out;
  for (int v = 0; v < 3; ++v) {
    if (m.exp[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[v];
    if (m.exp[v] > 1) out += '^' + std::to_string(m.exp[v]);
  }
  return out.empty() ? "1" : out;
}

std::string to_text(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    const Int a = abs(c);
    if (m == Monomial{}) {
      out += a.get_str();
    } else {
      if (a != 1) {
        out += a.get_str();
        out += '*';
      }
      out += monomial_text(f.vars(), m);
    }
  }
  return out;
}

Json to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    terms.push_back(Json{{"coeff", c.get_str()},
                         {"exp", Json::array({m.exp[0], m.exp[1], m.exp[2]})}});
  }
  const auto& names = var_names(f.vars());
  return Json{{"vars", Json::array({names[0], names[1], names[2]})},
              {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw Error("polynomial JSON must have 'vars' and 'terms'");
  std::optional<VarSet> vs;
  for (VarSet candidate : {VarSet::barred, VarSet::trace}) {
    const auto& names = var_names(candidate);
    if (j["vars"] == Json::array({names[0], names[1], names[2]})) vs = candidate;
  }
  if (!vs) throw Error("polynomial JSON has an unknown variable set");

  Polynomial out(*vs);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exp") ||
        !t["exp"].is_array() || t["exp"].size() != 3)
      throw Error("polynomial JSON term must have 'coeff' and 'exp' of length 3");
    Int coeff;
    if (t["coeff"].is_string())
      coeff = Int(t["coeff"].get<std::string>(), 10);
    else if (t["coeff"].is_number_integer())
      coeff = Int(t["coeff"].dump(), 10);  // decimal text of the JSON number
    else
      throw Error("polynomial JSON coefficient must be a decimal string");
    Monomial m;
    for (int v = 0; v < 3; ++v) {
      const auto e = t["exp"][v].get<long long>();
      if (e < 0 || e > 100000) throw Error("polynomial JSON exponent out of range");
      m.exp[v] = static_cast<int>(e);
    }
    out.add_term(m, coeff);
  }
  return out;
}

}  // namespace tbchar
