#include "tbchar/oracle.hpp"

#include "tbchar/trace_engine.hpp"

namespace tbchar {

ExactMatrix random_sl2(Rng& rng, int steps) {
  ExactMatrix m;
  for (int i = 0; i < steps; ++i) {
    // Off-diagonal entry in {-3,...,3} minus {0}.
    std::int64_t e = rng.uniform(-3, 2);
    if (e >= 0) ++e;
    ExactMatrix shear;
    if (rng.coin())
      shear.b = e;
    else
      shear.c = e;
    m = m * shear;
  }
  return m;
}

std::pair<ExactMatrix, ExactMatrix> random_matrix_pair(std::uint64_t seed,
                                                       std::uint64_t index) {
  Rng rng = Rng::stream(seed, index);
  const int steps_x = static_cast<int>(rng.uniform(8, 24));
  const ExactMatrix x = random_sl2(rng, steps_x);
  const int steps_xp = static_cast<int>(rng.uniform(8, 24));
  const ExactMatrix xp = random_sl2(rng, steps_xp);
  return {x, xp};
}

ExactMatrix eval_word_matrix(const Word& w, const ExactMatrix& x,
                             const ExactMatrix& xp) {
  ExactMatrix out;
  for (const Letter& l : w) {
    const ExactMatrix& base = l.gen == Gen::x ? x : xp;
    out = out * (l.exponent == 1 ? base : base.inverse());
  }
  return out;
}

std::array<Int, 3> trace_point(const ExactMatrix& x, const ExactMatrix& xp) {
  return {x.trace(), xp.trace(), (x * xp).trace()};
}

bool verify_trace_polynomial(const Word& w, int samples, std::uint64_t seed) {
  const Polynomial poly = trace_of_word(w);
  for (int i = 0; i < samples; ++i) {
    const auto [x, xp] = random_matrix_pair(seed, static_cast<std::uint64_t>(i));
    if (poly.evaluate(trace_point(x, xp)) != eval_word_matrix(w, x, xp).trace())
      return false;
  }
  return true;
}

}  // namespace tbchar
