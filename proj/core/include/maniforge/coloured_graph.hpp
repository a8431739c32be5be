#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "maniforge/types.hpp"

namespace maniforge {

/// An edge-coloured graph on flags 0..F-1 where colour i acts as a function
/// adj[i] on flags. No maniplex axioms are assumed; derived covers and
/// induced subgraphs live here until they are validated.
class ColouredGraph {
 public:
  ColouredGraph() = default;

  /// Throws ValidationError(Malformed) if the table is not rank x F with
  /// entries in range.
  ColouredGraph(std::size_t rank, std::vector<std::vector<Flag>> adj);

  std::size_t rank() const { return adj_.size(); }
  std::size_t flag_count() const { return adj_.empty() ? 0 : adj_.front().size(); }

  Flag neighbour(Flag u, Colour i) const { return adj_[i][u]; }
  std::span<const Flag> permutation(Colour i) const { return adj_[i]; }
  const std::vector<std::vector<Flag>>& table() const { return adj_; }

  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;

 private:
  std::vector<std::vector<Flag>> adj_;
};

struct ComponentLabels {
  std::vector<std::uint32_t> label;  // per flag; ids in order of least flag
  std::size_t count{0};
};

/// Connected components of the subgraph spanned by links with colours in J.
ComponentLabels components(const ColouredGraph& g, ColourSet colours);

/// Flag set of the component of the J-coloured subgraph containing u, sorted.
std::vector<Flag> colour_component(const ColouredGraph& g, Flag u, ColourSet colours);

bool is_connected(const ColouredGraph& g);

/// Connected components of the subgraph induced by `flags` (all colours,
/// links with both ends inside the set).
std::size_t induced_component_count(const ColouredGraph& g, std::span<const Flag> flags);

/// Two-colouring search on the subgraph induced by `flags`. Throws
/// maniforge::Error if that subgraph is disconnected.
bool is_bipartite(std::span<const Flag> flags, const ColouredGraph& g);

/// Whole-graph bipartiteness (every component).
bool is_bipartite(const ColouredGraph& g);

/// The subgraph on `flags`, relabelled 0..k-1 by increasing original index.
/// Colours outside `keep` become the identity. Every kept link must stay
/// inside the set.
ColouredGraph induced_subgraph(const ColouredGraph& g, std::span<const Flag> flags, ColourSet keep);

/// Relabelling order from a breadth-first search rooted at `base`, expanding
/// colours in increasing order. order[k] is the flag that receives label k.
std::vector<Flag> bfs_order(const ColouredGraph& g, Flag base);

/// Canonical relabelling rooted at `base`. The graph must be connected.
ColouredGraph canonical_form(const ColouredGraph& g, Flag base = 0);

}  // namespace maniforge
