#include "tbchar/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace tbchar {

const std::array<std::string, 3>& var_names(VarSet vs) {
  static const std::array<std::string, 3> trace_names = {"u", "v", "w"};
  static const std::array<std::string, 3> barred_names = {"x", "xp", "y"};
  return vs == VarSet::trace ? trace_names : barred_names;
}

Polynomial Polynomial::constant(VarSet vars, Int value) {
  Polynomial out(vars);
  out.add_term(Monomial{}, value);
  return out;
}

Polynomial Polynomial::variable(VarSet vars, int var) {
  Monomial m;
  m.exp[var] = 1;
  return term(vars, m, 1);
}

Polynomial Polynomial::term(VarSet vars, const Monomial& m, Int coeff) {
  Polynomial out(vars);
  out.add_term(m, coeff);
  return out;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  // The term order is graded, so the leading term has maximal total degree.
  return terms_.begin()->first.degree();
}

int Polynomial::degree_in(int var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp[var]);
  return d;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw ZeroPolynomial("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Int& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw ZeroPolynomial("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Int Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

Polynomial Polynomial::coefficient_of(int var, int k) const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.exp[var] != k) continue;
    Monomial rest = m;
    rest.exp[var] = 0;
    out.add_term(rest, c);
  }
  return out;
}

void Polynomial::add_term(const Monomial& m, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Int Polynomial::evaluate(const std::array<Int, 3>& point) const {
  Int sum = 0;
  for (const auto& [m, c] : terms_) {
    Int t = c;
    for (int v = 0; v < 3; ++v) {
      if (m.exp[v] == 0) continue;
      Int p;
      mpz_pow_ui(p.get_mpz_t(), point[v].get_mpz_t(),
                 static_cast<unsigned long>(m.exp[v]));
      t *= p;
    }
    sum += t;
  }
  return sum;
}

double Polynomial::evaluate_double(const std::array<double, 3>& point) const {
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (int v = 0; v < 3; ++v)
      if (m.exp[v] != 0) t *= std::pow(point[v], m.exp[v]);
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (vars_ != rhs.vars_) throw VariableSetMismatch();
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (vars_ != rhs.vars_) throw VariableSetMismatch();
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (vars_ != rhs.vars_) throw VariableSetMismatch();
  Polynomial out(vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m;
      for (int v = 0; v < 3; ++v) m.exp[v] = ma.exp[v] + mb.exp[v];
      out.add_term(m, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial pow(const Polynomial& base, int exponent) {
  if (exponent < 0) throw Error("polynomial exponent must be non-negative");
  Polynomial result = Polynomial::constant(base.vars(), 1);
  Polynomial sq = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result *= sq;
    e >>= 1;
    if (e > 0) sq *= sq;
  }
  return result;
}

Substitution& Substitution::set(int var, Polynomial image) {
  if (image.vars() != target_) throw VariableSetMismatch();
  images_[var] = std::move(image);
  return *this;
}

Polynomial Substitution::image(int var) const {
  if (images_[var]) return *images_[var];
  return Polynomial::variable(target_, var);
}

Polynomial substitute(const Polynomial& f, const Substitution& s) {
  const std::array<Polynomial, 3> images{s.image(0), s.image(1), s.image(2)};
  Polynomial out(s.target());
  for (const auto& [m, c] : f.terms()) {
    Polynomial t = Polynomial::constant(s.target(), c);
    for (int v = 0; v < 3; ++v)
      if (m.exp[v] > 0) t *= pow(images[v], m.exp[v]);
    out += t;
  }
  return out;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (f.vars() != g.vars()) throw VariableSetMismatch();
  if (g.is_zero()) throw DivisionByZero();
  Polynomial q(f.vars());
  Polynomial r = f;
  const Monomial gm = g.leading_monomial();
  const Int gc = g.leading_coefficient();
  // Each round eliminates r's leading term with a single quotient term, or
  // proves that no quotient exists: if f = q*g then the leading term of the
  // running remainder is always divisible by the leading term of g.
  while (!r.is_zero()) {
    const Monomial& rm = r.leading_monomial();
    Monomial qm;
    bool divides = true;
    for (int v = 0; v < 3; ++v) {
      qm.exp[v] = rm.exp[v] - gm.exp[v];
      if (qm.exp[v] < 0) divides = false;
    }
    Int qc, rem;
    if (divides) {
      mpz_fdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(),
                  r.leading_coefficient().get_mpz_t(), gc.get_mpz_t());
      if (rem != 0) divides = false;
    }
    if (!divides)
      throw NotDivisible("polynomial division leaves a remainder");
    const Polynomial t = Polynomial::term(f.vars(), qm, qc);
    q += t;
    r -= t * g;
  }
  return q;
}

DivisionInY divide_with_remainder_in_y(const Polynomial& f, const Polynomial& g) {
  if (f.vars() != g.vars()) throw VariableSetMismatch();
  if (g.is_zero()) throw DivisionByZero();
  const int dg = g.degree_in(kY);
  const Polynomial lead = g.coefficient_of(kY, dg);
  if (!lead.is_constant())
    throw LeadingCoefficientNotUnit(
        "divisor's leading y-coefficient must be a constant");
  const Int lc = lead.coefficient(Monomial{});
  if (lc != 1 && lc != -1)
    throw LeadingCoefficientNotUnit(
        "divisor's leading y-coefficient must be +1 or -1, got " +
        lc.get_str());

  DivisionInY out{Polynomial::zero(f.vars()), f};
  while (!out.remainder.is_zero() && out.remainder.degree_in(kY) >= dg) {
    const int dr = out.remainder.degree_in(kY);
    Monomial shift;
    shift.exp[kY] = dr - dg;
    // 1/lc = lc for a unit, so this cancels the whole y^dr slice at once.
    const Polynomial t =
        out.remainder.coefficient_of(kY, dr) * Polynomial::term(f.vars(), shift, lc);
    out.quotient += t;
    out.remainder -= t * g;
  }
  return out;
}

Polynomial derivative(const Polynomial& f, int var) {
  Polynomial out(f.vars());
  for (const auto& [m, c] : f.terms()) {
    if (m.exp[var] == 0) continue;
    Monomial d = m;
    d.exp[var] -= 1;
    out.add_term(d, c * m.exp[var]);
  }
  return out;
}

namespace {

// Dense univariate polynomials over Int: coefficients[i] multiplies y^i,
// normalized so the vector is empty (zero) or ends with a nonzero entry.
using DenseVec = std::vector<Int>;

void normalize(DenseVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void make_primitive(DenseVec& a) {
  if (a.empty()) return;
  Int g = 0;
  for (const Int& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (Int& c : a) c /= g;
}

// Pseudo-remainder: repeatedly r <- lc(b)*r - lc(r)*y^(deg r - deg b)*b until
// deg r < deg b.  Stays over the integers without requiring lc(b) = ±1.
DenseVec pseudo_remainder(DenseVec a, const DenseVec& b) {
  const Int& lcb = b.back();
  while (a.size() >= b.size()) {
    const Int lca = a.back();
    const std::size_t shift = a.size() - b.size();
    for (Int& c : a) c *= lcb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= lca * b[i];
    normalize(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

bool is_squarefree_univariate(const Polynomial& f) {
  if (f.is_zero())
    throw ZeroPolynomial("square-freeness of the zero polynomial is undefined");
  for (const auto& [m, c] : f.terms())
    if (m.exp[kX] != 0 || m.exp[kXp] != 0)
      throw NotUnivariate("polynomial must involve only the last variable");

  const int d = f.degree_in(kY);
  if (d == 0) return true;  // nonzero constants have no repeated factor

  DenseVec a(static_cast<std::size_t>(d) + 1, Int(0));
  for (const auto& [m, c] : f.terms()) a[m.exp[kY]] = c;
  DenseVec b(static_cast<std::size_t>(d), Int(0));
  for (int i = 1; i <= d; ++i) b[i - 1] = a[i] * i;
  normalize(b);
  make_primitive(a);
  make_primitive(b);

  // Primitive pseudo-remainder sequence; content is stripped every round so
  // coefficients stay small.  gcd(f, f') is constant iff f is square-free
  // over Q.
  while (!b.empty()) {
    DenseVec r = pseudo_remainder(std::move(a), b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

}  // namespace tbchar
