#include "maniforge/coloured_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "maniforge/error.hpp"

namespace maniforge {

namespace {
constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
}

ColouredGraph::ColouredGraph(std::size_t rank, std::vector<std::vector<Flag>> adj) : adj_(std::move(adj)) {
  if (adj_.size() != rank) {
    throw ValidationError(ValidationErrorKind::Malformed, 0, 0, 0,
                          "expected " + std::to_string(rank) + " colour rows, got " + std::to_string(adj_.size()));
  }
  if (rank > kMaxRank) {
    throw ValidationError(ValidationErrorKind::Malformed, 0, 0, 0, "rank above " + std::to_string(kMaxRank));
  }
  const std::size_t f = adj_.empty() ? 0 : adj_.front().size();
  for (Colour i = 0; i < rank; ++i) {
    if (adj_[i].size() != f) {
      throw ValidationError(ValidationErrorKind::Malformed, 0, i, i,
                            "colour " + std::to_string(i) + " row has " + std::to_string(adj_[i].size()) +
                                " entries, expected " + std::to_string(f));
    }
    for (Flag u = 0; u < f; ++u) {
      if (adj_[i][u] >= f) {
        throw ValidationError(ValidationErrorKind::Malformed, u, i, i,
                              "image " + std::to_string(adj_[i][u]) + " of flag " + std::to_string(u) +
                                  " under colour " + std::to_string(i) + " out of range");
      }
    }
  }
}

ComponentLabels components(const ColouredGraph& g, ColourSet colours) {
  const auto n = g.flag_count();
  const auto members = colours.members();
  for (Colour c : members) {
    if (c >= g.rank()) throw ColourOutOfRange(c, g.rank());
  }
  ComponentLabels out;
  out.label.assign(n, kUnset);
  std::vector<Flag> stack;
  for (Flag s = 0; s < n; ++s) {
    if (out.label[s] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.count++);
    out.label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Flag u = stack.back();
      stack.pop_back();
      for (Colour c : members) {
        const Flag v = g.neighbour(u, c);
        if (out.label[v] == kUnset) {
          out.label[v] = id;
          stack.push_back(v);
        }
      }
    }
  }
  return out;
}

std::vector<Flag> colour_component(const ColouredGraph& g, Flag u, ColourSet colours) {
  const auto members = colours.members();
  for (Colour c : members) {
    if (c >= g.rank()) throw ColourOutOfRange(c, g.rank());
  }
  std::vector<char> seen(g.flag_count(), 0);
  std::vector<Flag> out{u};
  seen[u] = 1;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (Colour c : members) {
      const Flag v = g.neighbour(out[k], c);
      if (!seen[v]) {
        seen[v] = 1;
        out.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const ColouredGraph& g) {
  if (g.flag_count() == 0) return false;
  return colour_component(g, 0, ColourSet::all(g.rank())).size() == g.flag_count();
}

namespace {

// Local index of every flag in the set, kUnset outside.
std::vector<std::uint32_t> local_index(const ColouredGraph& g, std::span<const Flag> flags) {
  std::vector<std::uint32_t> index(g.flag_count(), kUnset);
  for (std::size_t k = 0; k < flags.size(); ++k) index[flags[k]] = static_cast<std::uint32_t>(k);
  return index;
}

}  // namespace

std::size_t induced_component_count(const ColouredGraph& g, std::span<const Flag> flags) {
  const auto index = local_index(g, flags);
  std::vector<char> seen(flags.size(), 0);
  std::size_t count = 0;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s = 0; s < flags.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto k = stack.back();
      stack.pop_back();
      for (Colour c = 0; c < g.rank(); ++c) {
        const auto j = index[g.neighbour(flags[k], c)];
        if (j != kUnset && !seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
  }
  return count;
}

namespace {

// Two-colours every component touched from the given roots; false on an odd cycle.
bool two_colour(const ColouredGraph& g, std::span<const Flag> flags, const std::vector<std::uint32_t>& index,
                std::size_t& component_count) {
  std::vector<std::int8_t> side(flags.size(), -1);
  std::vector<std::uint32_t> stack;
  component_count = 0;
  for (std::uint32_t s = 0; s < flags.size(); ++s) {
    if (side[s] != -1) continue;
    ++component_count;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto k = stack.back();
      stack.pop_back();
      for (Colour c = 0; c < g.rank(); ++c) {
        const Flag v = g.neighbour(flags[k], c);
        const auto j = index[v];
        if (j == kUnset) continue;
        if (side[j] == -1) {
          side[j] = static_cast<std::int8_t>(1 - side[k]);
          stack.push_back(j);
        } else if (side[j] == side[k]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool is_bipartite(std::span<const Flag> flags, const ColouredGraph& g) {
  if (flags.empty() || induced_component_count(g, flags) != 1) {
    throw Error("is_bipartite: flag set does not induce a connected subgraph");
  }
  std::size_t count = 0;
  return two_colour(g, flags, local_index(g, flags), count);
}

bool is_bipartite(const ColouredGraph& g) {
  std::vector<Flag> all(g.flag_count());
  for (Flag u = 0; u < all.size(); ++u) all[u] = u;
  std::vector<std::uint32_t> index(all.begin(), all.end());
  std::size_t count = 0;
  return two_colour(g, all, index, count);
}

ColouredGraph induced_subgraph(const ColouredGraph& g, std::span<const Flag> flags, ColourSet keep) {
  std::vector<Flag> sorted(flags.begin(), flags.end());
  std::sort(sorted.begin(), sorted.end());
  const auto index = local_index(g, sorted);
  std::vector<std::vector<Flag>> adj(g.rank(), std::vector<Flag>(sorted.size()));
  for (Colour c = 0; c < g.rank(); ++c) {
    for (std::uint32_t k = 0; k < sorted.size(); ++k) {
      if (!keep.contains(c)) {
        adj[c][k] = k;
        continue;
      }
      const auto j = index[g.neighbour(sorted[k], c)];
      if (j == kUnset) {
        throw Error("induced_subgraph: colour " + std::to_string(c) + " link leaves the set at flag " +
                    std::to_string(sorted[k]));
      }
      adj[c][k] = j;
    }
  }
  return ColouredGraph(g.rank(), std::move(adj));
}

std::vector<Flag> bfs_order(const ColouredGraph& g, Flag base) {
  std::vector<char> seen(g.flag_count(), 0);
  std::vector<Flag> order{base};
  seen[base] = 1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (Colour c = 0; c < g.rank(); ++c) {
      const Flag v = g.neighbour(order[k], c);
      if (!seen[v]) {
        seen[v] = 1;
        order.push_back(v);
      }
    }
  }
  return order;
}

ColouredGraph canonical_form(const ColouredGraph& g, Flag base) {
  const auto order = bfs_order(g, base);
  if (order.size() != g.flag_count()) throw Error("canonical_form: graph is disconnected");
  std::vector<Flag> relabel(g.flag_count());
  for (std::size_t k = 0; k < order.size(); ++k) relabel[order[k]] = static_cast<Flag>(k);
  std::vector<std::vector<Flag>> adj(g.rank(), std::vector<Flag>(g.flag_count()));
  for (Colour c = 0; c < g.rank(); ++c) {
    for (std::size_t k = 0; k < order.size(); ++k) adj[c][k] = relabel[g.neighbour(order[k], c)];
  }
  return ColouredGraph(g.rank(), std::move(adj));
}

}  // namespace maniforge
