#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "tbchar/errors.hpp"

namespace tbchar {

// Exact arbitrary-precision integer; backs every coefficient and trace value.
using Int = mpz_class;

// The two coordinate systems in play: honest trace coordinates
// (u, v, w) = (tr X, tr X', tr XX') and the sign-flipped skein coordinates
// (x, xp, y) = (-u, -v, -w).
enum class VarSet { trace, barred };

const std::array<std::string, 3>& var_names(VarSet vs);

// Indices into exponent triples, for either variable set.
inline constexpr int kX = 0;   // x  (barred)  /  u (trace)
inline constexpr int kXp = 1;  // xp (barred)  /  v (trace)
inline constexpr int kY = 2;   // y  (barred)  /  w (trace)

// Exponent triple of one term.  Entries are never negative.
struct Monomial {
  std::array<int, 3> exp{0, 0, 0};

  int degree() const { return exp[0] + exp[1] + exp[2]; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order, written so that std::map iterates from the
// leading term down: higher total degree first, ties broken by the
// lexicographically greater exponent triple (first variable most
// significant).
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da > db;
    return a.exp > b.exp;
  }
};

// Sparse polynomial in three variables over the integers.  Zero coefficients
// are never stored; the zero polynomial has an empty term map.  Mixing
// operands over different variable sets throws VariableSetMismatch.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Int, TermOrder>;

  explicit Polynomial(VarSet vars) : vars_(vars) {}

  static Polynomial zero(VarSet vars) { return Polynomial(vars); }
  static Polynomial constant(VarSet vars, Int value);
  static Polynomial variable(VarSet vars, int var);
  static Polynomial term(VarSet vars, const Monomial& m, Int coeff);

  VarSet vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }

  // Total degree; -1 for the zero polynomial.
  int total_degree() const;
  // Degree in one variable; -1 for the zero polynomial.
  int degree_in(int var) const;

  // Leading term under the term order; throws ZeroPolynomial on zero.
  const Monomial& leading_monomial() const;
  const Int& leading_coefficient() const;

  // Coefficient of an exact monomial (0 if absent).
  Int coefficient(const Monomial& m) const;
  // Coefficient of var^k as a polynomial in the remaining variables.
  Polynomial coefficient_of(int var, int k) const;

  // Adds coeff * m, merging with an existing term and dropping zeros.
  void add_term(const Monomial& m, const Int& coeff);

  Int evaluate(const std::array<Int, 3>& point) const;
  double evaluate_double(const std::array<double, 3>& point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Int& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial out = lhs;
    return out *= rhs;
  }
  friend Polynomial operator*(Polynomial lhs, const Int& scalar) { return lhs *= scalar; }
  friend Polynomial operator*(const Int& scalar, Polynomial rhs) { return rhs *= scalar; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  VarSet vars_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& base, int exponent);

// Maps each input variable to a polynomial over `target`; variables left
// unset pass through as the same-index variable of the target set.
class Substitution {
 public:
  explicit Substitution(VarSet target) : target_(target) {}

  Substitution& set(int var, Polynomial image);
  VarSet target() const { return target_; }
  // Image of variable `var` (materializes the pass-through default).
  Polynomial image(int var) const;

 private:
  VarSet target_;
  std::array<std::optional<Polynomial>, 3> images_;
};

Polynomial substitute(const Polynomial& f, const Substitution& s);

// Exact division: returns q with f = q*g, throws NotDivisible if no such q
// exists (greedy leading-term elimination; sound because each step either
// cancels the current leading term or proves non-divisibility).
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

struct DivisionInY {
  Polynomial quotient;
  Polynomial remainder;  // degree in y strictly below deg_y(divisor)
};

// Division with remainder in the last variable, treating the coefficient
// ring Z[x, xp] as scalars.  The divisor's leading y-coefficient must be a
// constant unit (±1) so the division stays over the integers.
DivisionInY divide_with_remainder_in_y(const Polynomial& f, const Polynomial& g);

Polynomial derivative(const Polynomial& f, int var);

// True iff a nonzero polynomial in y alone has no repeated factor over Q,
// i.e. gcd(f, f') is constant (primitive pseudo-remainder sequence).
// Throws ZeroPolynomial / NotUnivariate when the input does not qualify.
bool is_squarefree_univariate(const Polynomial& f);

}  // namespace tbchar
