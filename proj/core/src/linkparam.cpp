#include "tbchar/linkparam.hpp"

#include <algorithm>
#include <numeric>

namespace tbchar {

TwoBridgeParam::TwoBridgeParam(std::int64_t twop, std::int64_t q)
    : twop_(twop), q_(q) {
  if (twop < 2 || twop % 2 != 0) throw NotEven(twop);
  if (q < 1 || q >= twop) throw OutOfRange(q, twop);
  if (std::gcd(q, twop) != 1) throw NotCoprime(q, twop);
}

std::string to_string(const TwoBridgeParam& l) {
  return "b(" + std::to_string(l.twop()) + "," + std::to_string(l.q()) + ")";
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  // Extended Euclid on (a mod m, m).
  std::int64_t r0 = ((a % m) + m) % m, r1 = m;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t k = r0 / r1;
    r0 -= k * r1;
    std::swap(r0, r1);
    s0 -= k * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw Error("inverse_mod requires coprime arguments");
  return ((s0 % m) + m) % m;
}

bool is_equivalent(const TwoBridgeParam& a, const TwoBridgeParam& b) {
  if (a.twop() != b.twop()) return false;
  return a.q() == b.q() || inverse_mod(a.q(), a.twop()) == b.q();
}

TwoBridgeParam canonical(const TwoBridgeParam& l) {
  const std::int64_t qinv = inverse_mod(l.q(), l.twop());
  return TwoBridgeParam(l.twop(), std::min(l.q(), qinv));
}

std::vector<int> epsilon_sequence(const TwoBridgeParam& l) {
  std::vector<int> eps;
  eps.reserve(static_cast<std::size_t>(l.twop() - 1));
  for (std::int64_t k = 1; k < l.twop(); ++k)
    eps.push_back((k * l.q() / l.twop()) % 2 == 0 ? 1 : -1);
  return eps;
}

Word relator_word(const TwoBridgeParam& l) {
  const std::vector<int> eps = epsilon_sequence(l);
  Word w;
  for (std::size_t k = 1; k <= eps.size(); ++k)
    w.append({k % 2 == 1 ? Gen::xp : Gen::x, eps[k - 1]});
  return w;
}

GroupPresentation presentation(const TwoBridgeParam& l) {
  const Word w = relator_word(l);
  return GroupPresentation{
      l,
      {"X", "Xp"},
      w,
      concat(Word::letter(Gen::x), w),
      concat(w, Word::letter(Gen::x)),
  };
}

std::vector<TwoBridgeParam> links_with_p_at_most(std::int64_t max_p) {
  std::vector<TwoBridgeParam> out;
  for (std::int64_t p = 1; p <= max_p; ++p)
    for (std::int64_t q = 1; q < 2 * p; q += 2)
      if (std::gcd(q, 2 * p) == 1) out.emplace_back(2 * p, q);
  return out;
}

}  // namespace tbchar
