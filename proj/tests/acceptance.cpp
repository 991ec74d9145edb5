// Acceptance suite: every release-gating property, one PASS/FAIL line per
// criterion.  Exits 0 iff all ten pass.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "tbchar/char_variety.hpp"
#include "tbchar/oracle.hpp"
#include "tbchar/rng.hpp"
#include "tbchar/skein_reduce.hpp"
#include "tbchar/trace_engine.hpp"
#include "test_support.hpp"

using namespace tbchar;
using test_support::random_polynomial;
using test_support::random_word;

namespace {

int passed_count = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": "
            << what << "\n";
  if (ok) ++passed_count;
}

Polynomial specialize(const Polynomial& f) {
  Substitution s(VarSet::barred);
  s.set(kX, Polynomial::zero(VarSet::barred));
  s.set(kXp, Polynomial::zero(VarSet::barred));
  return substitute(f, s);
}

Polynomial barred_const(long v) { return Polynomial::constant(VarSet::barred, v); }

struct SweepData {
  TwoBridgeParam param;
  EtaDetails details;
  Polynomial nab;
};

// Matrix-side helpers for the table validation (criterion 7).
ExactMatrix scale(const Int& s, const ExactMatrix& m) {
  return {s * m.a, s * m.b, s * m.c, s * m.d};
}
ExactMatrix add(const ExactMatrix& l, const ExactMatrix& r) {
  return {l.a + r.a, l.b + r.b, l.c + r.c, l.d + r.d};
}
ExactMatrix materialize(const AlgebraElement& e, const ExactMatrix& x,
                        const ExactMatrix& xp) {
  const auto pt = trace_point(x, xp);
  const std::array<ExactMatrix, 4> basis = {ExactMatrix::identity(), x, xp, x * xp};
  ExactMatrix out{0, 0, 0, 0};
  for (int k = 0; k < 4; ++k) out = add(out, scale(e.coeff(k).evaluate(pt), basis[k]));
  return out;
}

}  // namespace

int main() {
  const std::uint64_t seed = 20260813;

  // Shared sweep p <= 8 (31 links), computed once.
  std::vector<SweepData> sweep;
  for (const auto& l : links_with_p_at_most(8))
    sweep.push_back({l, eta_details(l), eta_nab(l)});

  // 1. Degrees and unit leading coefficients.
  {
    bool ok = sweep.size() == 31;
    for (const auto& s : sweep) {
      const auto p = s.param.p();
      const Polynomial raw_lead =
          s.details.raw.coefficient_of(kY, s.details.raw.degree_in(kY));
      ok = ok && s.details.raw.degree_in(kY) == p + 1;
      ok = ok && (raw_lead == barred_const(1) || raw_lead == barred_const(-1));
      ok = ok && s.nab.degree_in(kY) == p - 1;
      ok = ok && s.nab.coefficient_of(kY, static_cast<int>(p) - 1) == barred_const(1);
    }
    report(1, ok,
           "deg_y(eta) = p+1 and deg_y(eta_nab) = p-1 with unit leading "
           "coefficients for all 31 links with p <= 8");
  }

  // 2. Specialization identity eta(0,0,y) = ±(y^2-4) S_{p-1}(y).
  {
    bool ok = true;
    for (const auto& s : sweep) {
      const Polynomial at_origin = specialize(s.details.normalized);
      const Polynomial target =
          (Polynomial::variable(VarSet::barred, kY) *
               Polynomial::variable(VarSet::barred, kY) -
           barred_const(4)) *
          chebyshev_S(static_cast<int>(s.param.p()) - 1);
      ok = ok && (at_origin == target || at_origin == -target);
    }
    report(2, ok, "eta(0,0,y) = ±(y^2-4)*S_{p-1}(y) exactly across the sweep");
  }

  // 3. Square-freeness of the specialization.
  {
    bool ok = true;
    for (const auto& s : sweep)
      ok = ok && is_squarefree_univariate(specialize(s.details.normalized));
    report(3, ok, "eta(0,0,y) is square-free (exact univariate gcd) across the sweep");
  }

  // 4. Abelian factorization and the eta_ab reconciliation.
  {
    const Word comm{{Gen::x, 1}, {Gen::xp, 1}, {Gen::x, -1}, {Gen::xp, -1}};
    bool ok =
        eta_ab() == parse_polynomial("y^2 + x^2 + xp^2 + x*xp*y - 4") &&
        eta_ab() == to_barred(trace_of_word(comm)) - barred_const(2);
    for (const auto& s : sweep)
      ok = ok && eta_ab() * s.nab == s.details.normalized;
    report(4, ok,
           "eta = eta_ab * eta_nab exactly across the sweep; eta_ab matches "
           "both its explicit form and the commutator trace minus 2");
  }

  // 5. delta(n) closed form.
  {
    bool ok = true;
    for (int n = 1; n <= 64; ++n) {
      Polynomial closed =
          (Polynomial::variable(VarSet::barred, kY) *
               Polynomial::variable(VarSet::barred, kY) -
           barred_const(4)) *
          chebyshev_S(n - 1);
      if (n % 2 == 0) closed *= Int(-1);
      ok = ok && delta(n) == closed;
    }
    report(5, ok, "delta(n) = (-1)^(n-1)*(y^2-4)*S_{n-1}(y) for 1 <= n <= 64");
  }

  // 6. Oracle equivalence: 100 exact matrix pairs per link, p <= 6.
  {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    int links = 0;
    for (const auto& s : sweep) {
      if (s.param.p() > 6) continue;
      ++links;
      for (int i = 0; i < 100; ++i) {
        const auto [mx, mxp] = random_matrix_pair(seed, static_cast<std::uint64_t>(i));
        const Int direct = eval_word_matrix(s.details.first_word, mx, mxp).trace() -
                           eval_word_matrix(s.details.second_word, mx, mxp).trace();
        const auto pt = trace_point(mx, mxp);
        const Int via_poly =
            s.details.normalized.evaluate({-pt[0], -pt[1], -pt[2]});
        ok = ok && via_poly == s.details.sign * direct;
      }
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    ok = ok && links == 17;
    report(6, ok,
           "eta agrees with direct matrix traces on 100 random SL2 pairs for "
           "each of 17 links with p <= 6 (" +
               std::to_string(ms) + " ms)");
  }

  // 7. Trace-engine identities on 500 random words + the full table.
  {
    Rng rng(seed);
    bool ok = true;
    for (int i = 0; i < 500; ++i) {
      const Word w = random_word(rng, 10);
      const Word g = random_word(rng, 5);
      const Word b = random_word(rng, 6);
      ok = ok && trace_of_word(concat(concat(g, w), inverse(g))) == trace_of_word(w);
      ok = ok && trace_of_word(inverse(w)) == trace_of_word(w);
      ok = ok && trace_of_word(concat(w, b)) ==
                     trace_of_word(w) * trace_of_word(b) -
                         trace_of_word(concat(w, inverse(b)));
    }
    const std::array<Word, 4> basis_words = {Word{}, Word{{Gen::x, 1}},
                                             Word{{Gen::xp, 1}},
                                             Word{{Gen::x, 1}, {Gen::xp, 1}}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (std::uint64_t s = 0; s < 25; ++s) {
          const auto [mx, mxp] =
              random_matrix_pair(seed + 1, 100 * static_cast<std::uint64_t>(4 * i + j) + s);
          const ExactMatrix direct = eval_word_matrix(basis_words[i], mx, mxp) *
                                     eval_word_matrix(basis_words[j], mx, mxp);
          ok = ok && materialize(basis_product(i, j), mx, mxp) == direct;
        }
    report(7, ok,
           "conjugation/inversion/product trace identities on 500 random words; "
           "all 16 multiplication-table rows validated against exact matrices");
  }

  // 8. Normal-form contract: 200 random polynomials per link, p <= 4.
  {
    Rng rng(seed + 2);
    bool ok = true;
    int links = 0;
    for (const auto& l : links_with_p_at_most(4)) {
      ++links;
      const CharacterRingReducer red(l);
      for (int i = 0; i < 100; ++i) {
        const Polynomial f = random_polynomial(rng, VarSet::barred, 8, 6, 50);
        const Polynomial g = random_polynomial(rng, VarSet::barred, 8, 6, 50);
        const Polynomial nf = red.normal_form(f);
        const Polynomial ng = red.normal_form(g);
        ok = ok && nf.degree_in(kY) <= l.p();
        ok = ok && red.normal_form(nf) == nf;
        ok = ok && red.normal_form(f + g) == nf + ng;
        ok = ok && red.normal_form(f * Int(-3)) == nf * Int(-3);
        const Polynomial diff = f - nf;
        ok = ok && (diff.is_zero() ||
                    divide_exact(diff, red.relator()) * red.relator() == diff);
      }
    }
    ok = ok && links == 9;
    report(8, ok,
           "normal form has deg_y <= p, is idempotent and linear, and "
           "f - normal_form(f) is divisible by eta (200 random polynomials "
           "per link, 9 links with p <= 4)");
  }

  // 9. Hopf link closed case.
  {
    const TwoBridgeParam hopf(2, 1);
    const bool ok = eta(hopf) ==
                        parse_polynomial("x^2 + xp^2 + y^2 + x*xp*y - 4") &&
                    eta_nab(hopf) == barred_const(1) &&
                    eta(hopf).degree_in(kY) == 2 &&
                    eta_nab(hopf).degree_in(kY) == 0;
    report(9, ok,
           "eta(b(2,1)) = x^2 + xp^2 + y^2 + x*xp*y - 4 with eta_nab = 1 and "
           "degrees p+1 = 2, p-1 = 0");
  }

  // 10. Chebyshev roots.
  {
    bool ok = true;
    for (int p = 2; p <= 16; ++p) {
      const Polynomial s = chebyshev_S(p - 1);
      for (int j = 1; j <= p - 1; ++j) {
        const double root = 2.0 * std::cos(M_PI * j / p);
        ok = ok && std::abs(s.evaluate_double({0.0, 0.0, root})) < 1e-9;
      }
    }
    report(10, ok, "|S_{p-1}(2cos(pi j/p))| < 1e-9 for p <= 16, j = 1..p-1");
  }

  std::cout << "acceptance: " << passed_count << "/10 criteria passed\n";
  return passed_count == 10 ? 0 : 1;
}
