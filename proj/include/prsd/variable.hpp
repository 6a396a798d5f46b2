#pragma once

#include <cstdint>
#include <string>

#include "prsd/multi_index.hpp"

namespace prsd {

/// Identifier of a coordinate on jet space (or an auxiliary symbol),
/// packed into a single integer whose numeric order realizes the
/// documented total order:
///
///   base (t < x < y < z)
///     < fiber-jet (by fiber p < q < r, then graded-lex multi-index)
///     < auxiliary (by registration id)
///
/// Layout (high to low): tag(2) | payload(30). For fiber-jets the payload
/// is fiber(2) | order(6) | e_t(5) | e_x(5) | e_y(5) | e_z(5), so numeric
/// comparison gives exactly the graded-lex order. Orders up to 31 per
/// direction and 63 total are representable, far beyond anything sampled.
class VarId {
 public:
  enum class Tag : std::uint8_t { base = 0, jet = 1, aux = 2 };

  static VarId base(Dir d) {
    return VarId((0u << 30) | static_cast<std::uint32_t>(d));
  }

  static VarId jet(Fiber u, const MultiIndex& s) {
    std::uint32_t v = (1u << 30);
    v |= static_cast<std::uint32_t>(u) << 26;
    v |= static_cast<std::uint32_t>(s.order()) << 20;
    v |= static_cast<std::uint32_t>(s.e[0]) << 15;
    v |= static_cast<std::uint32_t>(s.e[1]) << 10;
    v |= static_cast<std::uint32_t>(s.e[2]) << 5;
    v |= static_cast<std::uint32_t>(s.e[3]);
    return VarId(v);
  }

  static VarId fiber(Fiber u) { return jet(u, MultiIndex()); }

  /// Auxiliary symbol; names are interned process-wide.
  static VarId aux(const std::string& name);

  Tag tag() const { return static_cast<Tag>(key_ >> 30); }
  bool is_base() const { return tag() == Tag::base; }
  bool is_jet() const { return tag() == Tag::jet; }
  bool is_aux() const { return tag() == Tag::aux; }

  Dir dir() const { return static_cast<Dir>(key_ & 0x3u); }

  Fiber jet_fiber() const { return static_cast<Fiber>((key_ >> 26) & 0x3u); }
  int jet_order() const { return static_cast<int>((key_ >> 20) & 0x3fu); }
  MultiIndex jet_index() const {
    return MultiIndex(static_cast<std::uint8_t>((key_ >> 15) & 0x1fu),
                      static_cast<std::uint8_t>((key_ >> 10) & 0x1fu),
                      static_cast<std::uint8_t>((key_ >> 5) & 0x1fu),
                      static_cast<std::uint8_t>(key_ & 0x1fu));
  }

  std::uint32_t key() const { return key_; }

  bool operator==(const VarId& o) const { return key_ == o.key_; }
  bool operator!=(const VarId& o) const { return key_ != o.key_; }
  bool operator<(const VarId& o) const { return key_ < o.key_; }

  /// "t", "p", "q_xy", "r_tzz", or the auxiliary name.
  std::string str() const;

 private:
  explicit VarId(std::uint32_t key) : key_(key) {}
  std::uint32_t key_ = 0;
};

inline VarId var_t() { return VarId::base(Dir::t); }
inline VarId var_x() { return VarId::base(Dir::x); }
inline VarId var_y() { return VarId::base(Dir::y); }
inline VarId var_z() { return VarId::base(Dir::z); }

}  // namespace prsd
