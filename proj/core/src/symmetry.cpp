#include "maniforge/symmetry.hpp"

#include <algorithm>
#include <limits>

namespace maniforge {

namespace {
constexpr Flag kUnset = std::numeric_limits<Flag>::max();
}

FlagMap FlagMap::identity(std::size_t flag_count) {
  std::vector<Flag> images(flag_count);
  for (Flag u = 0; u < flag_count; ++u) images[u] = u;
  return FlagMap(std::move(images));
}

FlagMap FlagMap::then(const FlagMap& other) const {
  std::vector<Flag> out(images_.size());
  for (std::size_t u = 0; u < images_.size(); ++u) out[u] = other(images_[u]);
  return FlagMap(std::move(out));
}

FlagMap FlagMap::inverse() const {
  std::vector<Flag> out(images_.size());
  for (std::size_t u = 0; u < images_.size(); ++u) out[images_[u]] = static_cast<Flag>(u);
  return FlagMap(std::move(out));
}

bool FlagMap::is_identity() const {
  for (std::size_t u = 0; u < images_.size(); ++u) {
    if (images_[u] != u) return false;
  }
  return true;
}

std::optional<Dart> FlagMap::commutation_failure(const ColouredGraph& g) const {
  if (images_.size() != g.flag_count()) return Dart{0, 0};
  std::vector<char> hit(images_.size(), 0);
  for (Flag u = 0; u < images_.size(); ++u) {
    if (hit[images_[u]]) return Dart{u, 0};
    hit[images_[u]] = 1;
  }
  for (Colour i = 0; i < g.rank(); ++i) {
    for (Flag u = 0; u < images_.size(); ++u) {
      if (images_[g.neighbour(u, i)] != g.neighbour(images_[u], i)) return Dart{u, i};
    }
  }
  return std::nullopt;
}

bool FlagMap::is_automorphism_of(const ColouredGraph& g) const { return !commutation_failure(g).has_value(); }

std::optional<FlagMap> try_extend(const ColouredGraph& g, Flag u, Flag v, Flag* conflict) {
  std::vector<Flag> image(g.flag_count(), kUnset);
  std::vector<Flag> queue{u};
  image[u] = v;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Flag w = queue[k];
    for (Colour i = 0; i < g.rank(); ++i) {
      const Flag next = g.neighbour(w, i);
      const Flag target = g.neighbour(image[w], i);
      if (image[next] == kUnset) {
        image[next] = target;
        queue.push_back(next);
      } else if (image[next] != target) {
        if (conflict != nullptr) *conflict = next;
        return std::nullopt;
      }
    }
  }
  if (queue.size() != g.flag_count()) throw Error("try_extend: graph is disconnected");
  return FlagMap(std::move(image));
}

FlagMap extend(const ColouredGraph& g, Flag u, Flag v) {
  Flag conflict = 0;
  auto result = try_extend(g, u, v, &conflict);
  if (!result) throw NoExtension(conflict);
  return std::move(*result);
}

std::size_t aut_order(const ColouredGraph& g) {
  std::size_t count = 0;
  for (Flag v = 0; v < g.flag_count(); ++v) {
    if (try_extend(g, 0, v)) ++count;
  }
  return count;
}

bool is_regular(const ColouredGraph& g) { return aut_order(g) == g.flag_count(); }

bool are_isomorphic(const ColouredGraph& a, const ColouredGraph& b) {
  if (a.rank() != b.rank() || a.flag_count() != b.flag_count()) return false;
  const auto target = canonical_form(a, 0);
  const auto n = b.flag_count();
  std::vector<Flag> relabel(n);
  std::vector<char> seen(n);
  std::vector<Flag> order;
  order.reserve(n);
  for (Flag base = 0; base < n; ++base) {
    // Breadth-first relabelling from `base`, compared against the target as it grows.
    std::fill(seen.begin(), seen.end(), 0);
    order.clear();
    order.push_back(base);
    seen[base] = 1;
    relabel[base] = 0;
    bool match = true;
    for (std::size_t k = 0; k < order.size() && match; ++k) {
      for (Colour c = 0; c < b.rank(); ++c) {
        const Flag v = b.neighbour(order[k], c);
        if (!seen[v]) {
          seen[v] = 1;
          relabel[v] = static_cast<Flag>(order.size());
          order.push_back(v);
        }
        if (relabel[v] != target.neighbour(static_cast<Flag>(k), c)) {
          match = false;
          break;
        }
      }
    }
    if (match && order.size() == n) return true;
  }
  return false;
}

bool is_self_dual(const Maniplex& m) { return are_isomorphic(m, dual(m)); }

}  // namespace maniforge
