#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace signedpaths {

/// A set of small non-negative integers (positions 0..31) stored as a bit mask.
/// Used for descent sets, bar sets and the like.
class PositionSet {
 public:
  static constexpr int kCapacity = 32;

  constexpr PositionSet() = default;
  constexpr PositionSet(std::initializer_list<int> positions) {
    for (int p : positions) insert(p);
  }

  static constexpr PositionSet from_bits(std::uint32_t bits) {
    PositionSet s;
    s.bits_ = bits;
    return s;
  }

  /// {lo, lo+1, ..., hi}; empty when hi < lo.
  static constexpr PositionSet interval(int lo, int hi) {
    PositionSet s;
    for (int p = lo; p <= hi; ++p) s.insert(p);
    return s;
  }

  constexpr bool contains(int p) const {
    return p >= 0 && p < kCapacity && ((bits_ >> p) & 1u) != 0;
  }
  constexpr void insert(int p) { bits_ |= (1u << p); }
  constexpr void erase(int p) { bits_ &= ~(1u << p); }

  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }

  /// Largest element; -1 when empty.
  constexpr int max() const { return bits_ == 0 ? -1 : 31 - std::countl_zero(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr bool is_subset_of(PositionSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr PositionSet operator|(PositionSet a, PositionSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr PositionSet operator&(PositionSet a, PositionSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr PositionSet operator^(PositionSet a, PositionSet b) { return from_bits(a.bits_ ^ b.bits_); }
  /// Set difference.
  friend constexpr PositionSet operator-(PositionSet a, PositionSet b) { return from_bits(a.bits_ & ~b.bits_); }

  constexpr bool operator==(const PositionSet&) const = default;
  constexpr auto operator<=>(const PositionSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace signedpaths
