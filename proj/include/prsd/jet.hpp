#pragma once

#include <array>
#include <vector>

#include "prsd/poly.hpp"

namespace prsd {

inline Poly jet_var(Fiber u, const MultiIndex& s) {
  return Poly::var(VarId::jet(u, s));
}
inline Poly fiber_var(Fiber u) { return jet_var(u, MultiIndex()); }
inline Poly base_var(Dir d) { return Poly::var(VarId::base(d)); }

/// Total derivative D_d e = de/dx_d + sum over jet variables u_s of
/// (de/du_s) u_{s+1_d}. Requires e to contain only base and jet variables.
Poly total_derivative(const Poly& e, Dir d);

/// Iterated total derivative D_sigma (directions applied in t,x,y,z order;
/// total derivatives commute).
Poly iterated_total_derivative(const Poly& e, const MultiIndex& sigma);

/// The governing second-order system: f[0], f[1], f[2] cut out the
/// equation in 2-jets; m and n are the first-order auxiliary expressions
/// entering f[1] and f[2]. All three are affine in second-order jet
/// variables with coefficients of order <= 1.
struct SdeSystem {
  Poly m, n;
  std::array<Poly, 3> f;

  struct TopCoeff {
    Fiber u;
    MultiIndex tau;  // |tau| = 2
    Poly coeff;      // df_i / du_tau, jet order <= 1
  };
  std::array<std::vector<TopCoeff>, 3> top;

  static const SdeSystem& instance();
};

}  // namespace prsd
