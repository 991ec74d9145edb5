#include "tbchar/trace_engine.hpp"

#include <utility>

namespace tbchar {

namespace {

Polynomial tzero() { return Polynomial::zero(VarSet::trace); }
Polynomial tconst(long v) { return Polynomial::constant(VarSet::trace, v); }
Polynomial U() { return Polynomial::variable(VarSet::trace, kX); }
Polynomial V() { return Polynomial::variable(VarSet::trace, kXp); }
Polynomial W() { return Polynomial::variable(VarSet::trace, kY); }

AlgebraElement make(Polynomial one, Polynomial x, Polynomial xp, Polynomial xxp) {
  AlgebraElement e;
  e.set_coeff(kBasisOne, std::move(one));
  e.set_coeff(kBasisX, std::move(x));
  e.set_coeff(kBasisXp, std::move(xp));
  e.set_coeff(kBasisXXp, std::move(xxp));
  return e;
}

using ProductTable = std::array<std::array<AlgebraElement, 4>, 4>;

// Cayley-Hamilton rewriting rules for products of the basis elements,
// written here as (coeff of 1, X, Xp, XXp):
//   X*X    = u X - 1
//   X*Xp   = XXp
//   X*XXp  = u XXp - Xp
//   Xp*X   = (w - u v) 1 + v X + u Xp - XXp
//   Xp*Xp  = v Xp - 1
//   Xp*XXp = -u 1 + X + w Xp
//   XXp*X  = -v 1 + w X + Xp
//   XXp*Xp = -X + v XXp
//   XXp*XXp= w XXp - 1
ProductTable build_table() {
  ProductTable t;
  for (int k = 0; k < 4; ++k) {
    t[0][static_cast<std::size_t>(k)] = AlgebraElement::basis(k);
    t[static_cast<std::size_t>(k)][0] = AlgebraElement::basis(k);
  }
  t[kBasisX][kBasisX] = make(tconst(-1), U(), tzero(), tzero());
  t[kBasisX][kBasisXp] = AlgebraElement::basis(kBasisXXp);
  t[kBasisX][kBasisXXp] = make(tzero(), tzero(), tconst(-1), U());
  t[kBasisXp][kBasisX] = make(W() - U() * V(), V(), U(), tconst(-1));
  t[kBasisXp][kBasisXp] = make(tconst(-1), tzero(), V(), tzero());
  t[kBasisXp][kBasisXXp] = make(-U(), tconst(1), W(), tzero());
  t[kBasisXXp][kBasisX] = make(-V(), W(), tconst(1), tzero());
  t[kBasisXXp][kBasisXp] = make(tzero(), tconst(-1), tzero(), V());
  t[kBasisXXp][kBasisXXp] = make(tconst(-1), tzero(), tzero(), W());
  return t;
}

}  // namespace

AlgebraElement::AlgebraElement()
    : c_{Polynomial::zero(VarSet::trace), Polynomial::zero(VarSet::trace),
         Polynomial::zero(VarSet::trace), Polynomial::zero(VarSet::trace)} {}

AlgebraElement AlgebraElement::identity() { return basis(kBasisOne); }

AlgebraElement AlgebraElement::basis(int k) {
  AlgebraElement e;
  e.c_[static_cast<std::size_t>(k)] = Polynomial::constant(VarSet::trace, 1);
  return e;
}

void AlgebraElement::set_coeff(int k, Polynomial value) {
  if (value.vars() != VarSet::trace) throw VariableSetMismatch();
  c_[static_cast<std::size_t>(k)] = std::move(value);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  for (int k = 0; k < 4; ++k) c_[static_cast<std::size_t>(k)] += rhs.coeff(k);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  for (int k = 0; k < 4; ++k) c_[static_cast<std::size_t>(k)] -= rhs.coeff(k);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Polynomial& scalar) {
  for (auto& c : c_) c *= scalar;
  return *this;
}

const AlgebraElement& basis_product(int left, int right) {
  static const ProductTable table = build_table();
  return table[static_cast<std::size_t>(left)][static_cast<std::size_t>(right)];
}

AlgebraElement algebra_mul(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (int i = 0; i < 4; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (b.coeff(j).is_zero()) continue;
      out += basis_product(i, j) * (a.coeff(i) * b.coeff(j));
    }
  }
  return out;
}

AlgebraElement multiply_by_letter(const AlgebraElement& e, Letter l) {
  const int basis = l.gen == Gen::x ? kBasisX : kBasisXp;
  AlgebraElement by_gen;
  for (int i = 0; i < 4; ++i) {
    if (e.coeff(i).is_zero()) continue;
    by_gen += basis_product(i, basis) * e.coeff(i);
  }
  if (l.exponent == 1) return by_gen;
  // X^-1 = u*1 - X (and likewise for Xp), so e*X^-1 = u*e - e*X.
  const Polynomial tr = l.gen == Gen::x ? U() : V();
  AlgebraElement out = e;
  out *= tr;
  out -= by_gen;
  return out;
}

AlgebraElement evaluate_word(const Word& w) {
  AlgebraElement acc = AlgebraElement::identity();
  for (const Letter& l : w) acc = multiply_by_letter(acc, l);
  return acc;
}

Polynomial trace(const AlgebraElement& e) {
  // tr 1 = 2, tr X = u, tr Xp = v, tr XXp = w.
  return e.coeff(kBasisOne) * Int(2) + e.coeff(kBasisX) * U() +
         e.coeff(kBasisXp) * V() + e.coeff(kBasisXXp) * W();
}

Polynomial trace_of_word(const Word& w) { return trace(evaluate_word(w)); }

Polynomial to_barred(const Polynomial& trace_poly) {
  if (trace_poly.vars() != VarSet::trace) throw VariableSetMismatch();
  Substitution s(VarSet::barred);
  s.set(kX, -Polynomial::variable(VarSet::barred, kX));
  s.set(kXp, -Polynomial::variable(VarSet::barred, kXp));
  s.set(kY, -Polynomial::variable(VarSet::barred, kY));
  return substitute(trace_poly, s);
}

}  // namespace tbchar
