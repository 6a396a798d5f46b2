#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "prsd/rational.hpp"

namespace prsd {

/// Base directions, fixed order (t, x, y, z).
enum class Dir : std::uint8_t { t = 0, x = 1, y = 2, z = 3 };

inline constexpr std::array<char, 4> kDirNames = {'t', 'x', 'y', 'z'};

/// Fiber components of the section (p, q, r).
enum class Fiber : std::uint8_t { p = 0, q = 1, r = 2 };

inline constexpr std::array<char, 3> kFiberNames = {'p', 'q', 'r'};

/// Derivative multi-index over (t, x, y, z).
struct MultiIndex {
  std::array<std::uint8_t, 4> e{0, 0, 0, 0};

  constexpr MultiIndex() = default;
  constexpr MultiIndex(std::uint8_t et, std::uint8_t ex, std::uint8_t ey,
                       std::uint8_t ez)
      : e{et, ex, ey, ez} {}

  static MultiIndex unit(Dir d) {
    MultiIndex m;
    m.e[static_cast<int>(d)] = 1;
    return m;
  }

  int order() const { return e[0] + e[1] + e[2] + e[3]; }

  MultiIndex operator+(const MultiIndex& o) const {
    return MultiIndex(static_cast<std::uint8_t>(e[0] + o.e[0]),
                      static_cast<std::uint8_t>(e[1] + o.e[1]),
                      static_cast<std::uint8_t>(e[2] + o.e[2]),
                      static_cast<std::uint8_t>(e[3] + o.e[3]));
  }

  MultiIndex plus(Dir d) const { return *this + unit(d); }

  bool operator==(const MultiIndex& o) const { return e == o.e; }
  bool operator!=(const MultiIndex& o) const { return e != o.e; }

  /// Graded order: by total order, then lexicographic on (e_t,e_x,e_y,e_z).
  bool operator<(const MultiIndex& o) const {
    if (order() != o.order()) return order() < o.order();
    return e < o.e;
  }

  /// sigma! = product of per-direction factorials.
  Rat factorial() const {
    Rat f(1);
    for (int i = 0; i < 4; ++i) f *= factorial_rat(e[i]);
    return f;
  }

  /// Multinomial-style suffix used when printing a jet variable, e.g. "txx".
  std::string suffix() const {
    std::string s;
    for (int i = 0; i < 4; ++i) s.append(e[i], kDirNames[i]);
    return s;
  }

  std::string key() const {  // "e_t e_x e_y e_z", the germ JSON key form
    return std::to_string(e[0]) + " " + std::to_string(e[1]) + " " +
           std::to_string(e[2]) + " " + std::to_string(e[3]);
  }

  static MultiIndex from_key(const std::string& k);
};

/// All multi-indices of exact total order m, in the graded order above.
std::vector<MultiIndex> multi_indices_of_order(int m);

/// All multi-indices of total order <= m, graded order.
std::vector<MultiIndex> multi_indices_up_to(int m);

/// Number of multi-indices of order exactly m in 4 directions: C(m+3,3).
inline long count_of_order(int m) { return binom(m + 3, 3); }

/// Number of multi-indices of order <= m: C(m+4,4).
inline long count_up_to(int m) { return binom(m + 4, 4); }

}  // namespace prsd
