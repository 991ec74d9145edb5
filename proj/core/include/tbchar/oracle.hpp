#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "tbchar/polynomial.hpp"
#include "tbchar/rng.hpp"
#include "tbchar/word.hpp"

namespace tbchar {

// Integer 2x2 matrix of determinant 1.  Arbitrary-precision entries: word
// evaluation multiplies dozens of shears, so traces overflow fixed widths.
struct ExactMatrix {
  Int a{1}, b{0}, c{0}, d{1};

  static ExactMatrix identity() { return {}; }

  Int trace() const { return a + d; }
  Int det() const { return a * d - b * c; }
  // [[d,-b],[-c,a]]; exact because det = 1.
  ExactMatrix inverse() const { return {d, -b, -c, a}; }

  friend ExactMatrix operator*(const ExactMatrix& l, const ExactMatrix& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;
};

// Product of `steps` random elementary shears (unit diagonal, one nonzero
// off-diagonal entry in {-3..3}\{0}); determinant 1 by construction.
ExactMatrix random_sl2(Rng& rng, int steps);

// Deterministic pair for sample `index` under `seed`: each matrix uses
// 8..24 shear steps drawn from an independent per-sample stream.
std::pair<ExactMatrix, ExactMatrix> random_matrix_pair(std::uint64_t seed,
                                                       std::uint64_t index);

ExactMatrix eval_word_matrix(const Word& w, const ExactMatrix& x,
                             const ExactMatrix& xp);

// (tr X, tr Xp, tr XXp) — the point of the trace variety the pair sits over.
std::array<Int, 3> trace_point(const ExactMatrix& x, const ExactMatrix& xp);

// True iff trace_of_word(w) evaluated at trace_point equals the directly
// computed matrix trace for every sampled pair.  Exact equality only.
bool verify_trace_polynomial(const Word& w, int samples, std::uint64_t seed);

}  // namespace tbchar
