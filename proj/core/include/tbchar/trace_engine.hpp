#pragma once

#include <array>

#include "tbchar/polynomial.hpp"
#include "tbchar/word.hpp"

namespace tbchar {

// Indices of the module basis {1, X, Xp, XXp} of the trace algebra: every
// word in two SL2 matrices reduces, by Cayley-Hamilton, to a combination of
// these four with coefficients in Z[u, v, w], where u = tr X, v = tr Xp,
// w = tr XXp.
inline constexpr int kBasisOne = 0;
inline constexpr int kBasisX = 1;
inline constexpr int kBasisXp = 2;
inline constexpr int kBasisXXp = 3;

// Element of the algebra written in that basis; coefficients are polynomials
// over the TRACE variable set.
class AlgebraElement {
 public:
  AlgebraElement();  // zero
  static AlgebraElement identity();
  static AlgebraElement basis(int k);

  const Polynomial& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  void set_coeff(int k, Polynomial value);

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(const Polynomial& scalar);
  friend AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement& rhs) {
    return lhs += rhs;
  }
  friend AlgebraElement operator-(AlgebraElement lhs, const AlgebraElement& rhs) {
    return lhs -= rhs;
  }
  friend AlgebraElement operator*(AlgebraElement lhs, const Polynomial& scalar) {
    return lhs *= scalar;
  }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::array<Polynomial, 4> c_;
};

// Product of two basis elements, from the hard-coded Cayley-Hamilton table
// (X*X = u X - 1 and friends).  Every row is validated against exact SL2
// matrices in the test suite before anything downstream trusts it.
const AlgebraElement& basis_product(int left, int right);

AlgebraElement algebra_mul(const AlgebraElement& a, const AlgebraElement& b);

// Right-multiplication by one letter; inverse letters are rewritten first
// via X^-1 = u*1 - X, Xp^-1 = v*1 - Xp.
AlgebraElement multiply_by_letter(const AlgebraElement& e, Letter l);

// Image of a word: left-to-right fold of multiply_by_letter from the
// identity.  Independent of bracketing.
AlgebraElement evaluate_word(const Word& w);

// tr(e) = 2 c_one + u c_X + v c_Xp + w c_XXp.
Polynomial trace(const AlgebraElement& e);
Polynomial trace_of_word(const Word& w);

// Substitutes (u, v, w) -> (-x, -xp, -y), the sign convention every
// published polynomial uses.
Polynomial to_barred(const Polynomial& trace_poly);

}  // namespace tbchar
