#pragma once

#include <cstdint>
#include <vector>

#include "prsd/germ.hpp"

namespace prsd {

/// Per-level bookkeeping from on-equation sampling; free-coordinate
/// counts reproduce the dimension of the prolonged equation.
struct LevelStat {
  int level = 0;
  int unknowns = 0;
  int equations = 0;
  int rank = 0;
  int free_count = 0;
};

struct SampleStats {
  std::vector<LevelStat> levels;  // levels 0..order

  /// 4 base dimensions plus all free jet coordinates through order k.
  long equation_dimension(int k) const {
    long d = 4;
    for (const auto& l : levels)
      if (l.level <= k) d += l.free_count;
    return d;
  }
};

/// Germ of the given order on the prolonged equation: D_sigma f_i
/// vanishes at the germ for all |sigma| <= order - 2. Base point lies on
/// the slice t = z = 0 with random nonzero x, y. Built level by level;
/// each level's equations are affine in that level's jets, so free
/// coordinates get random values and pivots are solved exactly.
/// Deterministic per (order, seed). Throws DegenerateSample after the
/// retry budget.
JetGerm sample_on_equation_germ(int order, std::uint64_t seed,
                                SampleStats* stats = nullptr,
                                int max_retries = 32);

/// Fully random germ (no equations imposed), same base-point convention.
JetGerm sample_ambient_germ(int order, std::uint64_t seed);

/// Random germ guaranteed to violate the equation at its base point
/// (some f_i != 0).
JetGerm sample_off_equation_germ(int order, std::uint64_t seed,
                                 int max_retries = 32);

}  // namespace prsd
