#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "prsd/errors.hpp"
#include "prsd/rational.hpp"
#include "prsd/variable.hpp"

namespace prsd {

/// Power product of variables: sorted (VarId, exponent) pairs, exponents
/// positive. The empty monomial is 1.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(VarId v, std::uint32_t e = 1) {
    if (e > 0) f_.emplace_back(v, e);
  }

  const std::vector<Factor>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [v, e] : f_) d += static_cast<int>(e);
    return d;
  }

  std::uint32_t exponent_of(VarId v) const {
    for (const auto& [w, e] : f_)
      if (w == v) return e;
    return 0;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    std::size_t i = 0, j = 0;
    while (i < f_.size() && j < o.f_.size()) {
      if (f_[i].first < o.f_[j].first) {
        r.f_.push_back(f_[i++]);
      } else if (o.f_[j].first < f_[i].first) {
        r.f_.push_back(o.f_[j++]);
      } else {
        r.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
        ++i, ++j;
      }
    }
    for (; i < f_.size(); ++i) r.f_.push_back(f_[i]);
    for (; j < o.f_.size(); ++j) r.f_.push_back(o.f_[j]);
    return r;
  }

  /// Monomial with the exponent of v lowered by one; requires it present.
  Monomial divide_once(VarId v) const {
    Monomial r;
    for (const auto& [w, e] : f_) {
      if (w == v) {
        if (e > 1) r.f_.emplace_back(w, e - 1);
      } else {
        r.f_.push_back({w, e});
      }
    }
    return r;
  }

  bool operator==(const Monomial& o) const { return f_ == o.f_; }

  /// Graded-lex order over the documented variable order: lower total
  /// degree first; on ties the leftmost differing variable decides, with
  /// higher exponent on the earlier variable ranking first.
  bool operator<(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    std::size_t i = 0, j = 0;
    while (i < f_.size() && j < o.f_.size()) {
      if (f_[i].first != o.f_[j].first) return o.f_[j].first < f_[i].first;
      if (f_[i].second != o.f_[j].second) return f_[i].second > o.f_[j].second;
      ++i, ++j;
    }
    return false;  // equal
  }

  std::string str() const;

 private:
  std::vector<Factor> f_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Canonical form: no zero coefficients, unique monomial keys, ordered map.
class Poly {
 public:
  using Terms = std::map<Monomial, Rat>;

  Poly() = default;
  Poly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[Monomial()] = Rat(c);
  }
  explicit Poly(const Rat& c) {
    if (!c.is_zero()) terms_[Monomial()] = c;
  }

  static Poly var(VarId v) {
    Poly p;
    p.terms_[Monomial(v)] = Rat(1);
    return p;
  }
  static Poly term(const Rat& c, const Monomial& m) {
    Poly p;
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of a monomial (zero if absent).
  Rat coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  void add_term(const Monomial& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const Rat& c, const Poly& p) {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
    return r;
  }

  Poly pow(unsigned e) const {
    Poly acc(1), base(*this);
    while (e) {
      if (e & 1u) acc *= base;
      if (e >>= 1u) base *= base;
    }
    return acc;
  }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Formal partial derivative, each VarId treated as independent.
  Poly partial(VarId v) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
      std::uint32_t e = m.exponent_of(v);
      if (e == 0) continue;
      r.add_term(m.divide_once(v), c * Rat(static_cast<long>(e)));
    }
    return r;
  }

  std::set<VarId> variables() const {
    std::set<VarId> s;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m.factors()) s.insert(v);
    return s;
  }

  /// Highest jet order among variables present (0 if none).
  int max_jet_order() const {
    int k = 0;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m.factors())
        if (v.is_jet()) k = std::max(k, v.jet_order());
    return k;
  }

  /// Exact evaluation. Lookup: VarId -> const Rat* (null = not covered).
  template <class Lookup>
  Rat evaluate(Lookup&& lookup) const {
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
      Rat t = c;
      for (const auto& [v, e] : m.factors()) {
        const Rat* val = lookup(v);
        if (val == nullptr) throw MissingVariable(v.str());
        t *= val->pow(e);
      }
      acc += t;
    }
    return acc;
  }

  /// Substitute variables by polynomials (unmapped variables persist).
  /// If trunc_degree >= 0, monomials of total degree above it are dropped
  /// during expansion (used for truncated Taylor composition).
  Poly substitute(const std::function<const Poly*(VarId)>& repl,
                  int trunc_degree = -1) const;

  std::string str() const;

 private:
  Terms terms_;
};

/// Product of two polynomials dropping monomials of degree > cap.
Poly mul_trunc(const Poly& a, const Poly& b, int cap);

/// Derivation extended by the Leibniz rule: dvar gives the image of each
/// variable (empty optional = annihilated).
Poly apply_derivation(const Poly& e,
                      const std::function<std::optional<Poly>(VarId)>& dvar);

}  // namespace prsd
