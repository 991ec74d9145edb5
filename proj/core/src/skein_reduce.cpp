#include "tbchar/skein_reduce.hpp"

#include "tbchar/char_variety.hpp"

namespace tbchar {

BasisDescriptor basis_descriptor(const TwoBridgeParam& l) {
  return BasisDescriptor{l, l.p()};
}

std::vector<Monomial> basis_monomials(const TwoBridgeParam& l,
                                      int max_total_degree) {
  const std::int64_t p = l.p();
  std::vector<Monomial> out;
  for (int d = 0; d <= max_total_degree; ++d)
    for (int a = d; a >= 0; --a)
      for (int b = d - a; b >= 0; --b) {
        const int c = d - a - b;
        if (c <= p) out.push_back(Monomial{{a, b, c}});
      }
  return out;
}

CharacterRingReducer::CharacterRingReducer(const TwoBridgeParam& l)
    : param_(l), eta_(eta(l)) {}

Polynomial CharacterRingReducer::normal_form(const Polynomial& f) const {
  return divide_with_remainder_in_y(f, eta_).remainder;
}

bool CharacterRingReducer::is_zero_in_character_ring(const Polynomial& f) const {
  return normal_form(f).is_zero();
}

Polynomial normal_form(const TwoBridgeParam& l, const Polynomial& f) {
  return CharacterRingReducer(l).normal_form(f);
}

bool is_zero_in_character_ring(const TwoBridgeParam& l, const Polynomial& f) {
  return CharacterRingReducer(l).is_zero_in_character_ring(f);
}

}  // namespace tbchar
