#include "tbchar/char_variety.hpp"

#include <utility>

#include "tbchar/oracle.hpp"
#include "tbchar/trace_engine.hpp"

namespace tbchar {

namespace {

Polynomial bvar(int v) { return Polynomial::variable(VarSet::barred, v); }
Polynomial bconst(long v) { return Polynomial::constant(VarSet::barred, v); }

Polynomial specialize_at_x0(const Polynomial& f) {
  Substitution s(VarSet::barred);
  s.set(kX, Polynomial::zero(VarSet::barred));
  s.set(kXp, Polynomial::zero(VarSet::barred));
  return substitute(f, s);
}

}  // namespace

EtaDetails eta_details(const TwoBridgeParam& l) {
  const Word w = relator_word(l);
  const Word first =
      concat(concat(Word::letter(Gen::x, -1), w), Word{{Gen::x, 1}, {Gen::xp, -1}});
  const Word second = concat(w, Word::letter(Gen::xp, -1));
  const Polynomial raw = to_barred(trace_of_word(first) - trace_of_word(second));

  // The construction guarantees a constant ±1 leading y-coefficient; fix the
  // published sign to +1 so outputs are deterministic.
  const Polynomial lead = raw.coefficient_of(kY, raw.degree_in(kY));
  int sign = 0;
  if (lead == bconst(1))
    sign = 1;
  else if (lead == bconst(-1))
    sign = -1;
  else
    throw LeadingCoefficientNotUnit("trace polynomial has non-unit leading y-coefficient");

  Polynomial normalized = raw;
  normalized *= Int(sign);
  return EtaDetails{l, first, second, raw, std::move(normalized), sign};
}

Polynomial eta(const TwoBridgeParam& l) { return eta_details(l).normalized; }

Polynomial eta_ab() {
  Polynomial f = bvar(kY) * bvar(kY);
  f += bvar(kX) * bvar(kX);
  f += bvar(kXp) * bvar(kXp);
  f += bvar(kX) * bvar(kXp) * bvar(kY);
  f -= bconst(4);
  return f;
}

Polynomial eta_nab(const TwoBridgeParam& l) {
  return divide_exact(eta(l), eta_ab());
}

Polynomial chebyshev_S(int n) {
  if (n < 0) throw InvalidParameter("chebyshev_S requires n >= 0");
  Polynomial prev = bconst(1);  // S_0
  if (n == 0) return prev;
  Polynomial cur = bvar(kY);  // S_1
  for (int k = 1; k < n; ++k) {
    Polynomial next = bvar(kY) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial delta(int n) {
  if (n < 1) throw InvalidParameter("delta requires n >= 1");
  Polynomial prev = bvar(kY) * bvar(kY) - bconst(4);  // delta_1
  if (n == 1) return prev;
  Polynomial cur = -(prev * bvar(kY));  // delta_2
  for (int k = 2; k < n; ++k) {
    Polynomial next = -(bvar(kY) * cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool CharacterRingReport::all_passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return true;
}

const CheckResult* CharacterRingReport::find(std::string_view name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

CharacterRingReport run_checks(const TwoBridgeParam& l, int oracle_samples,
                               std::uint64_t seed) {
  const EtaDetails det = eta_details(l);
  const std::int64_t p = l.p();
  CharacterRingReport rep{l,       det.normalized,
                          eta_ab(), Polynomial::zero(VarSet::barred),
                          det.sign, {}};

  bool divisible = true;
  try {
    rep.eta_nab = divide_exact(rep.eta, rep.eta_ab);
  } catch (const NotDivisible&) {
    divisible = false;
  }

  const int dy_eta = rep.eta.degree_in(kY);
  const int dy_nab = rep.eta_nab.degree_in(kY);
  rep.checks.push_back(
      {"degrees",
       dy_eta == p + 1 && divisible && dy_nab == p - 1,
       "deg_y(eta) = " + std::to_string(dy_eta) + " (want p+1 = " +
           std::to_string(p + 1) + "), deg_y(eta_nab) = " + std::to_string(dy_nab) +
           " (want p-1 = " + std::to_string(p - 1) + ")"});

  const Polynomial raw_lead = det.raw.coefficient_of(kY, det.raw.degree_in(kY));
  const bool raw_unit = raw_lead == bconst(1) || raw_lead == bconst(-1);
  const bool nab_unit =
      divisible && !rep.eta_nab.is_zero() &&
      rep.eta_nab.coefficient_of(kY, dy_nab) == bconst(1);
  rep.checks.push_back(
      {"leading_coefficients", raw_unit && nab_unit,
       std::string("raw eta y-lead = ") + (det.sign > 0 ? "+1" : "-1") +
           ", eta_nab y-lead " + (nab_unit ? "= +1" : "is not +1")});

  const Polynomial specialized = specialize_at_x0(rep.eta);
  const Polynomial target =
      (bvar(kY) * bvar(kY) - bconst(4)) * chebyshev_S(static_cast<int>(p) - 1);
  const bool spec_ok = specialized == target || specialized == -target;
  rep.checks.push_back(
      {"specialization", spec_ok,
       spec_ok ? "eta(0,0,y) = ±(y^2-4)*S_{p-1}(y)"
               : "eta(0,0,y) differs from ±(y^2-4)*S_{p-1}(y)"});

  bool sqfree = false;
  std::string sqfree_detail;
  try {
    sqfree = is_squarefree_univariate(specialized);
    sqfree_detail = sqfree ? "eta(0,0,y) is square-free"
                           : "eta(0,0,y) has a repeated factor";
  } catch (const Error& e) {
    sqfree_detail = e.what();
  }
  rep.checks.push_back({"squarefree", sqfree, sqfree_detail});

  const bool factor_ok = divisible && rep.eta_ab * rep.eta_nab == rep.eta;
  rep.checks.push_back({"factorization", factor_ok,
                        factor_ok ? "eta = eta_ab * eta_nab exactly"
                                  : "eta_ab * eta_nab differs from eta"});

  int agreed = 0;
  for (int i = 0; i < oracle_samples; ++i) {
    const auto [mx, mxp] = random_matrix_pair(seed, static_cast<std::uint64_t>(i));
    const Int direct = eval_word_matrix(det.first_word, mx, mxp).trace() -
                       eval_word_matrix(det.second_word, mx, mxp).trace();
    const auto point = trace_point(mx, mxp);
    const Int via_poly = rep.eta.evaluate({-point[0], -point[1], -point[2]});
    if (via_poly == det.sign * direct) ++agreed;
  }
  rep.checks.push_back({"oracle", agreed == oracle_samples,
                        std::to_string(agreed) + "/" +
                            std::to_string(oracle_samples) +
                            " random matrix pairs agree"});

  return rep;
}

}  // namespace tbchar
