#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tbchar/errors.hpp"
#include "tbchar/word.hpp"

namespace tbchar {

// Validated parameter pair (2p, q) of a two-bridge link b(2p,q):
// 2p positive and even, 1 <= q < 2p, gcd(q, 2p) = 1 (which forces q odd).
// Construction rejects out-of-convention inputs instead of reducing them.
class TwoBridgeParam {
 public:
  TwoBridgeParam(std::int64_t twop, std::int64_t q);

  std::int64_t twop() const { return twop_; }
  std::int64_t q() const { return q_; }
  std::int64_t p() const { return twop_ / 2; }

  friend bool operator==(const TwoBridgeParam&, const TwoBridgeParam&) = default;

 private:
  std::int64_t twop_;
  std::int64_t q_;
};

// "b(6,5)"
std::string to_string(const TwoBridgeParam& l);

// Multiplicative inverse of a mod m, in [1, m); requires gcd(a, m) = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

// b(2p',q') and b(2p,q) present the same link iff p' = p and
// q' = q^{+1} or q^{-1} mod 2p.
bool is_equivalent(const TwoBridgeParam& a, const TwoBridgeParam& b);
// Representative with the smaller of q and q^{-1} mod 2p.
TwoBridgeParam canonical(const TwoBridgeParam& l);

// eps_k = (-1)^floor(k q / 2p) for k = 1 .. 2p-1.  Palindromic in k.
std::vector<int> epsilon_sequence(const TwoBridgeParam& l);

// w = xp^{e1} x^{e2} xp^{e3} ... x^{e_{2p-2}} xp^{e_{2p-1}}: letters strictly
// alternate, odd (1-based) positions carry xp, exponents from
// epsilon_sequence.  Length 2p-1.
Word relator_word(const TwoBridgeParam& l);

// Group presentation < x, xp | x w = w x > of the link complement.
struct GroupPresentation {
  TwoBridgeParam param;
  std::array<std::string, 2> generators;  // printed names of x, xp
  Word word;                              // w
  Word lhs;                               // x w
  Word rhs;                               // w x
};
GroupPresentation presentation(const TwoBridgeParam& l);

// Every valid (2p, q) with 1 <= p <= max_p, ordered by (p, q).
std::vector<TwoBridgeParam> links_with_p_at_most(std::int64_t max_p);

}  // namespace tbchar
