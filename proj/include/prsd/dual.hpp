#pragma once

#include "prsd/poly.hpp"
#include "prsd/rat_fun.hpp"

namespace prsd {

/// Exact dual number a + eps*b with eps^2 = 0; the eps slot carries an
/// exact directional derivative through any rational computation.
struct Dual {
  Rat val, eps;

  Dual() : val(0), eps(0) {}
  Dual(Rat v) : val(std::move(v)), eps(0) {}  // NOLINT
  Dual(Rat v, Rat e) : val(std::move(v)), eps(std::move(e)) {}

  Dual operator-() const { return {-val, -eps}; }

  friend Dual operator+(const Dual& a, const Dual& b) {
    return {a.val + b.val, a.eps + b.eps};
  }
  friend Dual operator-(const Dual& a, const Dual& b) {
    return {a.val - b.val, a.eps - b.eps};
  }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return {a.val * b.val, a.val * b.eps + a.eps * b.val};
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    if (b.val.is_zero()) throw ZeroDenominator();
    Rat inv = b.val.inverse();
    return {a.val * inv, (a.eps * b.val - a.val * b.eps) * inv * inv};
  }

  Dual& operator+=(const Dual& o) { return *this = *this + o; }
  Dual& operator-=(const Dual& o) { return *this = *this - o; }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }

  Dual pow(unsigned e) const {
    Dual acc(Rat(1)), base(*this);
    while (e) {
      if (e & 1u) acc *= base;
      if (e >>= 1u) base *= base;
    }
    return acc;
  }

  bool operator==(const Dual& o) const { return val == o.val && eps == o.eps; }
};

/// Evaluate with every variable v replaced by value(v) + eps*pert(v).
/// value lookup: VarId -> const Rat* (null = uncovered, error);
/// pert lookup: VarId -> const Rat* (null = unperturbed).
template <class ValueLookup, class PertLookup>
Dual dual_evaluate(const Poly& e, ValueLookup&& value, PertLookup&& pert) {
  Dual acc;
  for (const auto& [m, c] : e.terms()) {
    Dual t{c, Rat(0)};
    for (const auto& [v, exp] : m.factors()) {
      const Rat* val = value(v);
      if (val == nullptr) throw MissingVariable(v.str());
      const Rat* d = pert(v);
      t *= Dual(*val, d ? *d : Rat(0)).pow(exp);
    }
    acc += t;
  }
  return acc;
}

template <class ValueLookup, class PertLookup>
Dual dual_evaluate(const RatFun& e, ValueLookup&& value, PertLookup&& pert) {
  Dual den = dual_evaluate(e.den(), value, pert);
  if (den.val.is_zero()) throw ZeroDenominator();
  return dual_evaluate(e.num(), value, pert) / den;
}

}  // namespace prsd
