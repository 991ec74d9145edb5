#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tbchar/char_variety.hpp"
#include "tbchar/skein_reduce.hpp"
#include "test_support.hpp"

using namespace tbchar;
using test_support::P;
using test_support::random_polynomial;

TEST_CASE("basis_descriptor") {
  CHECK(basis_descriptor(TwoBridgeParam(2, 1)).y_degree_bound == 1);
  CHECK(basis_descriptor(TwoBridgeParam(6, 5)).y_degree_bound == 3);
}

TEST_CASE("basis_monomials: worked examples") {
  const auto b1 = basis_monomials(TwoBridgeParam(2, 1), 1);
  REQUIRE(b1.size() == 4);
  CHECK(b1[0] == Monomial{{0, 0, 0}});
  CHECK(b1[1] == Monomial{{1, 0, 0}});
  CHECK(b1[2] == Monomial{{0, 1, 0}});
  CHECK(b1[3] == Monomial{{0, 0, 1}});

  // Degree <= 2 has 10 monomials; c <= 1 drops y^2.
  const auto b2 = basis_monomials(TwoBridgeParam(2, 1), 2);
  CHECK(b2.size() == 9);
  for (const auto& m : b2) CHECK(m.exp[kY] <= 1);

  const auto b3 = basis_monomials(TwoBridgeParam(6, 5), 2);
  CHECK(b3.size() == 10);  // p = 3 never truncates at degree 2

  CHECK(basis_monomials(TwoBridgeParam(2, 1), 0).size() == 1);
}

TEST_CASE("basis_monomials: ordering and cap for a larger sweep") {
  for (const auto& l : links_with_p_at_most(4)) {
    const auto mons = basis_monomials(l, 7);
    for (std::size_t i = 0; i < mons.size(); ++i) {
      CHECK(mons[i].exp[kY] <= l.p());
      if (i + 1 < mons.size()) {
        const bool ascending =
            mons[i].degree() < mons[i + 1].degree() ||
            (mons[i].degree() == mons[i + 1].degree() &&
             mons[i].exp > mons[i + 1].exp);
        CHECK(ascending);
      }
    }
    // Count: all (a,b,c) with a+b+c <= 7 and c <= p.
    std::size_t expected = 0;
    for (int a = 0; a <= 7; ++a)
      for (int b = 0; a + b <= 7; ++b)
        for (int c = 0; a + b + c <= 7; ++c)
          if (c <= l.p()) ++expected;
    CHECK(mons.size() == expected);
  }
}

TEST_CASE("normal_form: Hopf worked examples") {
  const TwoBridgeParam hopf(2, 1);
  CHECK(normal_form(hopf, P("y^2")) == P("-x^2 - xp^2 - x*xp*y + 4"));
  CHECK(normal_form(hopf, P("x")) == P("x"));
  CHECK(normal_form(hopf, eta(hopf)).is_zero());
  CHECK(normal_form(hopf, P("x^3 + y")) == P("x^3 + y"));  // deg_y <= p stays put
}

TEST_CASE("is_zero_in_character_ring") {
  const TwoBridgeParam hopf(2, 1);
  CHECK(is_zero_in_character_ring(hopf, eta(hopf) * P("x + y")));
  CHECK(!is_zero_in_character_ring(hopf, P("1")));
  CHECK(is_zero_in_character_ring(hopf, Polynomial::zero(VarSet::barred)));

  const TwoBridgeParam l(6, 5);
  CHECK(is_zero_in_character_ring(l, eta_ab() * eta_nab(l)));
  CHECK(!is_zero_in_character_ring(l, eta_ab()));
}

TEST_CASE("normal_form contract on random polynomials") {
  Rng rng(60657);
  for (const auto& l : links_with_p_at_most(3)) {
    const CharacterRingReducer red(l);
    CHECK(red.relator() == eta(l));
    CHECK(red.param() == l);
    for (int i = 0; i < 50; ++i) {
      const Polynomial f = random_polynomial(rng, VarSet::barred, 8, 6, 40);
      const Polynomial g = random_polynomial(rng, VarSet::barred, 8, 6, 40);
      const Polynomial nf = red.normal_form(f);
      const Polynomial ng = red.normal_form(g);

      CHECK(nf.degree_in(kY) <= l.p());
      CHECK(red.normal_form(nf) == nf);                    // idempotent
      CHECK(red.normal_form(f + g) == nf + ng);            // additive
      CHECK(red.normal_form(f * Int(-7)) == nf * Int(-7)); // Z-linear
      CHECK(red.is_zero_in_character_ring(f - nf));        // sound
      if (!(f - nf).is_zero())
        CHECK(divide_exact(f - nf, red.relator()) * red.relator() == f - nf);
      // Multiplicative in the quotient.
      CHECK(red.normal_form(f * g) == red.normal_form(nf * ng));
    }
  }
}
