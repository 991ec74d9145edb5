#pragma once

#include <cstdint>
#include <vector>

#include "tbchar/linkparam.hpp"
#include "tbchar/polynomial.hpp"

namespace tbchar {

// Basis data of the reduced module: monomials x^a xp^b y^c with the
// y-exponent capped at p.
struct BasisDescriptor {
  TwoBridgeParam param;
  std::int64_t y_degree_bound;  // = p
};

BasisDescriptor basis_descriptor(const TwoBridgeParam& l);

// All (a,b,c) with a+b+c <= max_total_degree and c <= p, graded
// lexicographically: ascending total degree, and within a degree x-exponent
// before xp-exponent before y-exponent, descending.
std::vector<Monomial> basis_monomials(const TwoBridgeParam& l,
                                      int max_total_degree);

// Reduction modulo the character relator eta, which is computed once per
// parameter and shared by every call.
class CharacterRingReducer {
 public:
  explicit CharacterRingReducer(const TwoBridgeParam& l);

  const TwoBridgeParam& param() const { return param_; }
  const Polynomial& relator() const { return eta_; }

  // Unique representative of f mod eta with y-degree <= p (remainder of
  // division by eta in y; eta's +1 leading coefficient keeps everything
  // over the integers).
  Polynomial normal_form(const Polynomial& f) const;
  // True iff eta divides f exactly.
  bool is_zero_in_character_ring(const Polynomial& f) const;

 private:
  TwoBridgeParam param_;
  Polynomial eta_;
};

Polynomial normal_form(const TwoBridgeParam& l, const Polynomial& f);
bool is_zero_in_character_ring(const TwoBridgeParam& l, const Polynomial& f);

}  // namespace tbchar
