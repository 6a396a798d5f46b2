#include "prsd/poly.hpp"

#include <mutex>
#include <unordered_map>

namespace prsd {

namespace {

struct AuxRegistry {
  std::mutex mu;
  std::vector<std::string> names;
  std::unordered_map<std::string, std::uint32_t> ids;
};

AuxRegistry& aux_registry() {
  static AuxRegistry* r = new AuxRegistry();
  return *r;
}

}  // namespace

VarId VarId::aux(const std::string& name) {
  auto& reg = aux_registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto it = reg.ids.find(name);
  if (it != reg.ids.end()) return VarId((2u << 30) | it->second);
  auto id = static_cast<std::uint32_t>(reg.names.size());
  reg.names.push_back(name);
  reg.ids.emplace(name, id);
  return VarId((2u << 30) | id);
}

std::string VarId::str() const {
  switch (tag()) {
    case Tag::base:
      return std::string(1, kDirNames[static_cast<int>(dir())]);
    case Tag::jet: {
      std::string s(1, kFiberNames[static_cast<int>(jet_fiber())]);
      MultiIndex m = jet_index();
      if (m.order() > 0) s += "_" + m.suffix();
      return s;
    }
    case Tag::aux: {
      auto& reg = aux_registry();
      std::lock_guard<std::mutex> lock(reg.mu);
      return reg.names.at(key_ & 0x3fffffffu);
    }
  }
  return "?";
}

MultiIndex MultiIndex::from_key(const std::string& k) {
  MultiIndex m;
  int vals[4] = {0, 0, 0, 0};
  if (std::sscanf(k.c_str(), "%d %d %d %d", &vals[0], &vals[1], &vals[2],
                  &vals[3]) != 4)
    throw Error("bad multi-index key: \"" + k + "\"");
  for (int i = 0; i < 4; ++i) {
    if (vals[i] < 0 || vals[i] > 31)
      throw Error("multi-index exponent out of range in \"" + k + "\"");
    m.e[i] = static_cast<std::uint8_t>(vals[i]);
  }
  return m;
}

std::vector<MultiIndex> multi_indices_of_order(int m) {
  std::vector<MultiIndex> out;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; a + b <= m; ++b)
      for (int c = 0; a + b + c <= m; ++c)
        out.push_back(MultiIndex(static_cast<std::uint8_t>(a),
                                 static_cast<std::uint8_t>(b),
                                 static_cast<std::uint8_t>(c),
                                 static_cast<std::uint8_t>(m - a - b - c)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(int m) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= m; ++k) {
    auto level = multi_indices_of_order(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string Monomial::str() const {
  if (f_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : f_) {
    if (!s.empty()) s += "*";
    s += v.str();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest-degree terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs =
        c.den() == 1 ? c.num().get_str() : c.num().get_str() + "/" + c.den().get_str();
    if (!s.empty() && cs[0] != '-') s += "+";
    if (m.is_one()) {
      s += cs;
    } else if (cs == "1") {
      s += m.str();
    } else if (cs == "-1") {
      s += "-" + m.str();
    } else {
      s += cs + "*" + m.str();
    }
  }
  return s;
}

Poly Poly::substitute(const std::function<const Poly*(VarId)>& repl,
                      int trunc_degree) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    for (const auto& [v, e] : m.factors()) {
      const Poly* r = repl(v);
      Poly factor = r != nullptr ? *r : Poly::var(v);
      for (std::uint32_t i = 0; i < e; ++i) {
        t = trunc_degree >= 0 ? mul_trunc(t, factor, trunc_degree) : t * factor;
        if (t.is_zero()) break;
      }
      if (t.is_zero()) break;
    }
    out += t;
  }
  return out;
}

Poly mul_trunc(const Poly& a, const Poly& b, int cap) {
  Poly r;
  for (const auto& [ma, ca] : a.terms()) {
    int da = ma.degree();
    if (da > cap) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (da + mb.degree() > cap) continue;
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

Poly apply_derivation(const Poly& e,
                      const std::function<std::optional<Poly>(VarId)>& dvar) {
  Poly out;
  for (const auto& [m, c] : e.terms()) {
    for (const auto& [v, exp] : m.factors()) {
      auto dv = dvar(v);
      if (!dv || dv->is_zero()) continue;
      // c * exp * m/v * dv
      Poly piece = Poly::term(c * Rat(static_cast<long>(exp)), m.divide_once(v));
      out += piece * (*dv);
    }
  }
  return out;
}

}  // namespace prsd
