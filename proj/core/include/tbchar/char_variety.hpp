#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tbchar/linkparam.hpp"
#include "tbchar/polynomial.hpp"
#include "tbchar/word.hpp"

namespace tbchar {

// The two words whose trace difference defines eta, plus the raw and
// sign-normalized results.  Kept separate so checks can look at the
// pre-normalization leading coefficient.
struct EtaDetails {
  TwoBridgeParam param;
  Word first_word;       // x^-1 w x xp^-1
  Word second_word;      // w xp^-1
  Polynomial raw;        // barred trace difference, as computed
  Polynomial normalized; // raw scaled so the y^(p+1) coefficient is +1
  int sign;              // normalized == sign * raw
};

EtaDetails eta_details(const TwoBridgeParam& l);

// Defining polynomial of the character ring of b(2p,q), sign-normalized so
// the coefficient of y^(p+1) is +1.
Polynomial eta(const TwoBridgeParam& l);

// Abelian factor y^2 + x^2 + xp^2 + x*xp*y - 4; equals the barred commutator
// trace minus 2 and does not depend on the link.
Polynomial eta_ab();

// Nonabelian factor eta / eta_ab (exact division; y-degree p-1).
Polynomial eta_nab(const TwoBridgeParam& l);

// S_0 = 1, S_1 = y, S_{n+1} = y S_n - S_{n-1}; univariate in y.
Polynomial chebyshev_S(int n);

// delta_1 = y^2 - 4, delta_2 = -(y^2 - 4) y, delta_{n+1} = -y delta_n - delta_{n-1};
// closed form (-1)^(n-1) (y^2 - 4) S_{n-1}(y).  Requires n >= 1.
Polynomial delta(int n);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct CharacterRingReport {
  TwoBridgeParam param;
  Polynomial eta;
  Polynomial eta_ab;
  Polynomial eta_nab;
  int sign;  // normalization sign applied to the raw trace difference
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(std::string_view name) const;
};

// Runs every verification the construction makes checkable:
//   degrees              deg_y(eta) = p+1 and deg_y(eta_nab) = p-1
//   leading_coefficients both y-leading coefficients are units (pre-normalization ±1)
//   specialization       eta(0,0,y) = ±(y^2-4) S_{p-1}(y)
//   squarefree           eta(0,0,y) has no repeated factors
//   factorization        eta = eta_ab * eta_nab exactly
//   oracle               direct matrix traces match on `oracle_samples` random pairs
// A failed check is a report entry, never an exception.
CharacterRingReport run_checks(const TwoBridgeParam& l, int oracle_samples,
                               std::uint64_t seed);

}  // namespace tbchar
