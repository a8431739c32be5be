#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "maniforge/maniplex.hpp"
#include "maniforge/poset.hpp"
#include "maniforge/symmetry.hpp"

namespace maniforge {

/// Voltages in the additive cyclic group Z_m on the darts of a base maniplex.
/// Every link stores both darts; setting one sets the other to its negative,
/// so the inverse condition holds by construction. Unset darts carry 0.
class VoltageAssignment {
 public:
  VoltageAssignment(Maniplex base, std::uint32_t modulus);

  const Maniplex& base() const { return base_; }
  std::uint32_t modulus() const { return modulus_; }

  /// Value of the dart from u along its colour-i link.
  std::uint32_t operator()(Flag u, Colour i) const { return values_[index(u, i)]; }
  std::uint32_t operator()(Dart d) const { return (*this)(d.flag, d.colour); }

  /// Sets the dart u -> u^i to `value` mod m and the reverse dart to -value.
  void set(Flag u, Colour i, std::int64_t value);

  /// Builds from a full per-dart table values[i][u]; throws maniforge::Error
  /// at the first link that breaks the inverse condition.
  static VoltageAssignment from_table(Maniplex base, std::uint32_t modulus,
                                      const std::vector<std::vector<std::uint32_t>>& values);

  std::size_t nonzero_dart_count() const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((a + b) % modulus_); }
  std::uint32_t negate(std::uint32_t a) const { return a == 0 ? 0 : modulus_ - a; }

  friend bool operator==(const VoltageAssignment&, const VoltageAssignment&) = default;

 private:
  std::size_t index(Flag u, Colour i) const { return static_cast<std::size_t>(i) * base_.flag_count() + u; }

  Maniplex base_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> values_;
};

/// Sum of the dart voltages along the walk, accumulated last dart first.
std::uint32_t net_voltage(const VoltageAssignment& zeta, const Walk& w);

/// Cover flag (u, g) has index u*m + g.
inline Flag cover_flag(Flag base_flag, std::uint32_t layer, std::uint32_t modulus) {
  return base_flag * modulus + layer;
}

/// Cov(M, zeta): (u, g)^i = (u^i, zeta(u -> u^i) + g), colours inherited.
ColouredGraph derived_cover(const VoltageAssignment& zeta);

struct CoverCheck {
  PropertyCertificate certificate;
  std::optional<Maniplex> cover;  // set when the verdict is true
};

/// Connected, and every alternating 4-cycle of non-consecutive colours in the
/// base has zero net voltage.
CoverCheck cover_is_maniplex(const VoltageAssignment& zeta);

struct Connectivity {
  bool connected{false};
  /// Set when zeta vanishes on a breadth-first spanning tree of the base:
  /// whether the voltages generate Z_m.
  std::optional<bool> generation_criterion;
};

/// Direct connectivity of the cover. When zeta is reduced on the spanning
/// tree, the generation criterion is evaluated too and must agree; a
/// disagreement throws std::logic_error.
Connectivity cover_connected(const VoltageAssignment& zeta);

/// Breadth-first spanning tree of the base rooted at flag 0: tree darts in
/// discovery order, each as (parent, colour).
std::vector<Dart> spanning_tree(const ColouredGraph& g);

/// Fundamental closed walk of a non-tree link: root -> u, the link, u^i -> root.
Walk fundamental_cycle(const ColouredGraph& g, Dart non_tree_link);

/// Derived cover over Z_2 with every dart valued 1.
ColouredGraph canonical_double_cover(const ColouredGraph& g);
VoltageAssignment canonical_voltage(const Maniplex& m);

/// Number of connected components of pi^{-1}(F) in the derived cover.
std::size_t fibre_components(const VoltageAssignment& zeta, const Face& face);

/// Per rank, the common component count of every face preimage, or nothing
/// if faces of that rank disagree.
std::vector<std::optional<std::size_t>> fibre_profile(const VoltageAssignment& zeta);

/// Rank 4 only: the profile is (1, m, m, 1), the hypothesis under which a
/// thin base has a thin cover.
bool is_alternately_connected(const VoltageAssignment& zeta);

/// Checks zeta(phi(x)) = f * zeta(x) on every dart and returns the lift
/// (u, g) -> (phi(u), f*g) after verifying it is an automorphism of the
/// cover. Throws NoLift with the first failing dart.
FlagMap check_lift(const VoltageAssignment& zeta, const FlagMap& phi, std::int64_t multiplier);

/// Layer translation (u, g) -> (u, g + h) on the cover.
FlagMap layer_translation(std::size_t base_flags, std::uint32_t modulus, std::uint32_t shift);

// Voltage file: "volt <m>" then "u i value" lines for the nonzero darts with
// u < u^i; the reverse dart is implied. '#' starts a comment.

VoltageAssignment read_voltage(std::istream& in, const Maniplex& base);
void write_voltage(std::ostream& out, const VoltageAssignment& zeta);

}  // namespace maniforge
