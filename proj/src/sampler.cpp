#include "prsd/sampler.hpp"

#include <map>

#include "prsd/linalg.hpp"
#include "prsd/rng.hpp"

namespace prsd {

namespace {

JetGerm random_germ(int order, Rng& rng) {
  std::array<Rat, 4> base{Rat(0), Rat(rng.nonzero_small_int()),
                          Rat(rng.nonzero_small_int()), Rat(0)};
  JetGerm g(base, order);
  for (int u = 0; u < 3; ++u)
    for (const auto& s : multi_indices_up_to(order))
      g.set_jet_value(static_cast<Fiber>(u), s, rng.small_rat());
  return g;
}

JetGerm try_sample(int order, Rng& rng, SampleStats* stats) {
  const auto& sde = SdeSystem::instance();
  std::array<Rat, 4> base{Rat(0), Rat(rng.nonzero_small_int()),
                          Rat(rng.nonzero_small_int()), Rat(0)};
  JetGerm g(base, order);
  SampleStats st;

  // Levels 0 and 1 are unconstrained.
  for (int lvl = 0; lvl <= std::min(order, 1); ++lvl) {
    int n = 0;
    for (const auto& s : multi_indices_of_order(lvl))
      for (int u = 0; u < 3; ++u) {
        g.set_jet_value(static_cast<Fiber>(u), s, rng.small_rat());
        ++n;
      }
    st.levels.push_back({lvl, n, 0, 0, n});
  }

  for (int lvl = 2; lvl <= order; ++lvl) {
    const auto sigmas = multi_indices_of_order(lvl - 2);
    const auto taus = multi_indices_of_order(lvl);
    const int ncols = 3 * static_cast<int>(taus.size());
    const int nrows = 3 * static_cast<int>(sigmas.size());

    // Column layout follows the canonical variable order: fiber-major,
    // multi-indices ascending.
    std::map<std::uint32_t, int> col_of;
    for (int u = 0; u < 3; ++u)
      for (std::size_t i = 0; i < taus.size(); ++i)
        col_of[VarId::jet(static_cast<Fiber>(u), taus[i]).key()] =
            u * static_cast<int>(taus.size()) + static_cast<int>(i);

    Mat A(nrows, ncols);
    std::vector<Rat> b(nrows, Rat(0));
    int row = 0;
    for (int i = 0; i < 3; ++i) {
      // With level-lvl jets still absent (zero), the composed Taylor
      // polynomial gives the inhomogeneous part of every D_sigma f_i.
      Poly t = compose_with_germ(sde.f[i], g);
      for (const auto& sigma : sigmas) {
        for (const auto& tc : sde.top[i]) {
          int col = col_of.at(VarId::jet(tc.u, tc.tau + sigma).key());
          A.at(row, col) += evaluate_at(tc.coeff, g);
        }
        b[row] = -derivative_value_at(t, sigma);
        ++row;
      }
    }

    SolveResult sol;
    try {
      sol = linear_solve(A, b, [&rng](int) { return rng.small_rat(); });
    } catch (const Inconsistent&) {
      throw DegenerateSample("inconsistent level system");
    }
    if (sol.rank != nrows)
      throw DegenerateSample("rank-deficient level system");

    for (int u = 0; u < 3; ++u)
      for (std::size_t i = 0; i < taus.size(); ++i)
        g.set_jet_value(
            static_cast<Fiber>(u), taus[i],
            sol.solution[u * static_cast<int>(taus.size()) +
                         static_cast<int>(i)]);
    st.levels.push_back({lvl, ncols, nrows, sol.rank, ncols - sol.rank});
  }

  if (stats != nullptr) *stats = std::move(st);
  return g;
}

}  // namespace

JetGerm sample_on_equation_germ(int order, std::uint64_t seed,
                                SampleStats* stats, int max_retries) {
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(attempt)));
    try {
      return try_sample(order, rng, stats);
    } catch (const DegenerateSample&) {
      continue;
    }
  }
  throw DegenerateSample("on-equation sampling: retry budget exhausted");
}

JetGerm sample_ambient_germ(int order, std::uint64_t seed) {
  Rng rng(Rng::mix(seed, 0));
  return random_germ(order, rng);
}

JetGerm sample_off_equation_germ(int order, std::uint64_t seed,
                                 int max_retries) {
  const auto& sde = SdeSystem::instance();
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(attempt)));
    JetGerm g = random_germ(order, rng);
    for (int i = 0; i < 3; ++i)
      if (!evaluate_at(sde.f[i], g).is_zero()) return g;
  }
  throw DegenerateSample("off-equation sampling: retry budget exhausted");
}

}  // namespace prsd
