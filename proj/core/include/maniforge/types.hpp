#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace maniforge {

/// Flags are dense indices 0..F-1.
using Flag = std::uint32_t;

/// Colours are dense indices 0..n-1.
using Colour = std::uint32_t;

inline constexpr std::size_t kMaxRank = 32;

/// A subset of [n] stored as a bitmask. Ranks above 32 are not supported.
class ColourSet {
 public:
  constexpr ColourSet() = default;
  constexpr explicit ColourSet(std::uint32_t bits) : bits_(bits) {}
  constexpr ColourSet(std::initializer_list<Colour> colours) {
    for (Colour c : colours) bits_ |= (std::uint32_t{1} << c);
  }

  static constexpr ColourSet all(std::size_t rank) {
    return ColourSet(rank >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << rank) - 1));
  }
  static constexpr ColourSet all_but(std::size_t rank, Colour excluded) {
    return all(rank).without(excluded);
  }

  constexpr bool contains(Colour c) const { return (bits_ >> c) & 1U; }
  constexpr ColourSet with(Colour c) const { return ColourSet(bits_ | (std::uint32_t{1} << c)); }
  constexpr ColourSet without(Colour c) const { return ColourSet(bits_ & ~(std::uint32_t{1} << c)); }
  constexpr ColourSet complement(std::size_t rank) const { return ColourSet(all(rank).bits_ & ~bits_); }
  constexpr bool subset_of(ColourSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint32_t bits() const { return bits_; }

  /// Largest colour index plus one, 0 for the empty set.
  constexpr std::size_t span() const { return 32U - static_cast<std::size_t>(std::countl_zero(bits_)); }

  std::vector<Colour> members() const {
    std::vector<Colour> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Colour>(std::countr_zero(b)));
    return out;
  }

  friend constexpr bool operator==(ColourSet, ColourSet) = default;

 private:
  std::uint32_t bits_{0};
};

/// A walk given by its start flag and the colours of the links it traces.
struct Walk {
  Flag start{0};
  std::vector<Colour> colours;
};

/// An ordered pair (u, u^i), identified by its initial flag and colour.
struct Dart {
  Flag flag{0};
  Colour colour{0};
  friend constexpr auto operator<=>(const Dart&, const Dart&) = default;
};

}  // namespace maniforge
