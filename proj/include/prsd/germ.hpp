#pragma once

#include <array>
#include <map>
#include <string>
#include <unordered_map>

#include "prsd/jet.hpp"
#include "prsd/poly.hpp"

namespace prsd {

/// Truncated Taylor expansion of a section (p, q, r) at a base point; the
/// canonical representation of a point of a prolonged jet space. Stored
/// values are Taylor coefficients; the jet coordinate is sigma! times the
/// coefficient. Coefficients absent from the maps are zero.
class JetGerm {
 public:
  JetGerm() = default;
  JetGerm(std::array<Rat, 4> base_point, int order)
      : base_(std::move(base_point)), order_(order) {
    for (int i = 0; i < 4; ++i)
      values_[VarId::base(static_cast<Dir>(i)).key()] = base_[i];
  }

  const std::array<Rat, 4>& base_point() const { return base_; }
  int order() const { return order_; }

  void set_taylor_coeff(Fiber u, const MultiIndex& s, const Rat& c) {
    coeff_[static_cast<int>(u)][s] = c;
    values_[VarId::jet(u, s).key()] = s.factorial() * c;
  }
  void set_jet_value(Fiber u, const MultiIndex& s, const Rat& v) {
    coeff_[static_cast<int>(u)][s] = v / s.factorial();
    values_[VarId::jet(u, s).key()] = v;
  }

  Rat taylor_coeff(Fiber u, const MultiIndex& s) const {
    auto& m = coeff_[static_cast<int>(u)];
    auto it = m.find(s);
    return it == m.end() ? Rat(0) : it->second;
  }
  Rat jet_value(Fiber u, const MultiIndex& s) const {
    return s.factorial() * taylor_coeff(u, s);
  }
  const std::map<MultiIndex, Rat>& taylor_coeffs(Fiber u) const {
    return coeff_[static_cast<int>(u)];
  }

  /// Assignment lookup for Poly::evaluate: base and jet coordinates up to
  /// the germ order are covered (missing in-range jets are zero).
  const Rat* lookup(VarId v) const {
    auto it = values_.find(v.key());
    if (it != values_.end()) return &it->second;
    if (v.is_jet() && v.jet_order() <= order_) return &zero_;
    return nullptr;
  }

  /// JSON: { "base_point": ["num/den" x4], "order": N,
  ///         "coefficients": {"p": {"et ex ey ez": "num/den", ...}, ...} }
  std::string to_json() const;
  static JetGerm from_json(const std::string& text);

 private:
  std::array<Rat, 4> base_{Rat(0), Rat(0), Rat(0), Rat(0)};
  int order_ = 0;
  std::array<std::map<MultiIndex, Rat>, 3> coeff_;
  std::unordered_map<std::uint32_t, Rat> values_;
  Rat zero_ = Rat(0);
};

inline auto germ_lookup(const JetGerm& g) {
  return [&g](VarId v) { return g.lookup(v); };
}

/// Exact evaluation of a jet expression at a germ.
inline Rat evaluate_at(const Poly& e, const JetGerm& g) {
  return e.evaluate(germ_lookup(g));
}

/// Taylor composition e o germ: polynomial T in the base variables
/// (read as offsets from the base point) of total degree
/// germ.order - (max jet order of e), with d_tau T(0) = (D_tau e)(germ)
/// for all |tau| <= deg T. Throws OrderTooLow when the germ is shorter
/// than the expression's jet order.
Poly compose_with_germ(const Poly& e, const JetGerm& g);

/// Coefficient of the offset monomial delta^tau in a composed polynomial.
Rat offset_coeff(const Poly& t, const MultiIndex& tau);

/// Value of the iterated total derivative D_tau e at the germ, computed
/// through the Taylor composition (tau! times the offset coefficient).
inline Rat derivative_value_at(const Poly& composed, const MultiIndex& tau) {
  return tau.factorial() * offset_coeff(composed, tau);
}

}  // namespace prsd
