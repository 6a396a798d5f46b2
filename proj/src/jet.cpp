#include "prsd/jet.hpp"

namespace prsd {

Poly total_derivative(const Poly& e, Dir d) {
  return apply_derivation(e, [d](VarId v) -> std::optional<Poly> {
    if (v.is_base())
      return v.dir() == d ? std::optional<Poly>(Poly(1)) : std::nullopt;
    if (v.is_jet()) return jet_var(v.jet_fiber(), v.jet_index().plus(d));
    throw Error("total derivative applied to auxiliary variable " + v.str());
  });
}

Poly iterated_total_derivative(const Poly& e, const MultiIndex& sigma) {
  Poly r = e;
  for (int d = 0; d < 4; ++d)
    for (int i = 0; i < sigma.e[d]; ++i)
      r = total_derivative(r, static_cast<Dir>(d));
  return r;
}

namespace {

SdeSystem build_sde() {
  SdeSystem s;
  const Poly p = fiber_var(Fiber::p), q = fiber_var(Fiber::q),
             r = fiber_var(Fiber::r);
  auto j1 = [](Fiber u, Dir d) { return jet_var(u, MultiIndex::unit(d)); };
  const Poly pt = j1(Fiber::p, Dir::t), px = j1(Fiber::p, Dir::x),
             py = j1(Fiber::p, Dir::y), pz = j1(Fiber::p, Dir::z);
  const Poly qt = j1(Fiber::q, Dir::t), qx = j1(Fiber::q, Dir::x),
             qy = j1(Fiber::q, Dir::y), qz = j1(Fiber::q, Dir::z);
  const Poly rt = j1(Fiber::r, Dir::t), rx = j1(Fiber::r, Dir::x),
             ry = j1(Fiber::r, Dir::y);

  s.m = pz - qt + p * qx - q * px + q * qy - r * py;
  s.n = qz - rt + q * ry - r * qy + p * rx - q * qx;

  s.f[0] = jet_var(Fiber::p, MultiIndex(0, 2, 0, 0)) +
           Rat(2) * jet_var(Fiber::q, MultiIndex(0, 1, 1, 0)) +
           jet_var(Fiber::r, MultiIndex(0, 0, 2, 0));
  s.f[1] = total_derivative(s.m, Dir::x) + total_derivative(s.n, Dir::y);
  s.f[2] = total_derivative(s.m, Dir::z) - q * total_derivative(s.m, Dir::x) -
           r * total_derivative(s.m, Dir::y) + (qx + ry) * s.m -
           (total_derivative(s.n, Dir::t) - p * total_derivative(s.n, Dir::x) -
            q * total_derivative(s.n, Dir::y) + (px + qy) * s.n);

  for (int i = 0; i < 3; ++i)
    for (const auto& tau : multi_indices_of_order(2))
      for (int u = 0; u < 3; ++u) {
        Poly c = s.f[i].partial(VarId::jet(static_cast<Fiber>(u), tau));
        if (!c.is_zero())
          s.top[i].push_back({static_cast<Fiber>(u), tau, std::move(c)});
      }
  return s;
}

}  // namespace

const SdeSystem& SdeSystem::instance() {
  static const SdeSystem* s = new SdeSystem(build_sde());
  return *s;
}

}  // namespace prsd
