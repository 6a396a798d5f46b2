#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "prsd/rational.hpp"

namespace prsd {

/// Deterministic seeded RNG. mt19937_64 has a standard-specified output
/// sequence and the integer mapping below avoids the
/// implementation-defined std::uniform_int_distribution, so draws are
/// reproducible across platforms and compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t next() { return g_(); }

  /// Uniform integer in [lo, hi], rejection-sampled (unbiased).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = g_();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  /// Small integer in [-10, 10]; the range keeps intermediate expression
  /// sizes manageable in exact arithmetic.
  std::int64_t small_int() { return uniform(-10, 10); }

  /// Small integer in [-10, 10] excluding 0.
  std::int64_t nonzero_small_int() {
    std::int64_t v;
    do {
      v = small_int();
    } while (v == 0);
    return v;
  }

  Rat small_rat() { return Rat(small_int()); }

  /// FNV-1a style mixing of a master seed with a label; used to derive
  /// per-check seeds so that checks are independent of execution order.
  static std::uint64_t derive(std::uint64_t master, std::string_view label) {
    std::uint64_t h = 1469598103934665603ull ^ master;
    for (char c : label) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    return h;
  }

  /// Derive a per-sample seed; sample i gets the same stream whether the
  /// sweep runs serially or in parallel.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace prsd
