#include "prsd/germ.hpp"

#include <json.hpp>

namespace prsd {

std::string JetGerm::to_json() const {
  nlohmann::ordered_json j;
  for (const auto& b : base_) j["base_point"].push_back(b.str());
  j["order"] = order_;
  nlohmann::ordered_json coeffs;
  for (int u = 0; u < 3; ++u) {
    nlohmann::ordered_json fj = nlohmann::ordered_json::object();
    for (const auto& [s, c] : coeff_[u])
      if (!c.is_zero()) fj[s.key()] = c.str();
    coeffs[std::string(1, kFiberNames[u])] = fj;
  }
  j["coefficients"] = coeffs;
  return j.dump(2);
}

JetGerm JetGerm::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::array<Rat, 4> base;
  for (int i = 0; i < 4; ++i)
    base[i] = Rat::from_string(j.at("base_point").at(i).get<std::string>());
  JetGerm g(base, j.at("order").get<int>());
  const auto& coeffs = j.at("coefficients");
  for (int u = 0; u < 3; ++u) {
    std::string name(1, kFiberNames[u]);
    if (!coeffs.contains(name)) continue;
    for (const auto& [key, val] : coeffs.at(name).items()) {
      MultiIndex s = MultiIndex::from_key(key);
      if (s.order() > g.order())
        throw Error("germ coefficient beyond stated order: " + key);
      g.set_taylor_coeff(static_cast<Fiber>(u), s,
                         Rat::from_string(val.get<std::string>()));
    }
  }
  return g;
}

Poly compose_with_germ(const Poly& e, const JetGerm& g) {
  const int ord_e = e.max_jet_order();
  if (g.order() < ord_e) throw OrderTooLow(ord_e, g.order());
  const int cap = g.order() - ord_e;

  // Replacements: base variable -> base value + offset variable; jet
  // variable u_s -> its Taylor series around the base point, truncated.
  std::map<std::uint32_t, Poly> repl;
  for (VarId v : e.variables()) {
    if (v.is_base()) {
      repl[v.key()] =
          Poly(g.base_point()[static_cast<int>(v.dir())]) + Poly::var(v);
    } else if (v.is_jet()) {
      const Fiber u = v.jet_fiber();
      const MultiIndex s = v.jet_index();
      Poly series;
      for (const auto& tau : multi_indices_up_to(g.order() - s.order())) {
        if (tau.order() > cap) break;
        Rat c = g.jet_value(u, s + tau) / tau.factorial();
        if (c.is_zero()) continue;
        Monomial m;
        for (int d = 0; d < 4; ++d)
          if (tau.e[d] > 0)
            m = m * Monomial(VarId::base(static_cast<Dir>(d)), tau.e[d]);
        series.add_term(m, c);
      }
      repl[v.key()] = std::move(series);
    } else {
      throw Error("cannot compose auxiliary variable " + v.str() +
                  " with a germ");
    }
  }
  return e.substitute(
      [&repl](VarId v) -> const Poly* {
        auto it = repl.find(v.key());
        return it == repl.end() ? nullptr : &it->second;
      },
      cap);
}

Rat offset_coeff(const Poly& t, const MultiIndex& tau) {
  Monomial m;
  for (int d = 0; d < 4; ++d)
    if (tau.e[d] > 0)
      m = m * Monomial(VarId::base(static_cast<Dir>(d)), tau.e[d]);
  return t.coeff(m);
}

}  // namespace prsd
