#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "maniforge/maniplex.hpp"

namespace maniforge {

/// A permutation of flags. As an automorphism it commutes with every colour.
class FlagMap {
 public:
  FlagMap() = default;
  explicit FlagMap(std::vector<Flag> images) : images_(std::move(images)) {}

  static FlagMap identity(std::size_t flag_count);

  Flag operator()(Flag u) const { return images_[u]; }
  std::size_t size() const { return images_.size(); }
  std::span<const Flag> images() const { return images_; }

  /// (this then other): u -> other(this(u)).
  FlagMap then(const FlagMap& other) const;
  FlagMap inverse() const;
  bool is_identity() const;

  /// First (flag, colour) where phi(u^i) != phi(u)^i, if any.
  std::optional<Dart> commutation_failure(const ColouredGraph& g) const;
  bool is_automorphism_of(const ColouredGraph& g) const;

  friend bool operator==(const FlagMap&, const FlagMap&) = default;

 private:
  std::vector<Flag> images_;
};

/// Propagates u -> v along links. Returns nothing on a conflict, storing the
/// conflicting flag in `conflict` when given. The graph must be connected.
std::optional<FlagMap> try_extend(const ColouredGraph& g, Flag u, Flag v, Flag* conflict = nullptr);

/// Throws NoExtension.
FlagMap extend(const ColouredGraph& g, Flag u, Flag v);

/// Number of automorphisms, counted as successful extensions from flag 0.
std::size_t aut_order(const ColouredGraph& g);

bool is_regular(const ColouredGraph& g);

/// Canonical-form equality for some base flag of `b` against base flag 0 of `a`.
/// Works for any connected coloured graphs (faces and cover components included).
bool are_isomorphic(const ColouredGraph& a, const ColouredGraph& b);

bool is_self_dual(const Maniplex& m);

}  // namespace maniforge
