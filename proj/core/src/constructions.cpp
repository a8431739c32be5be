#include "maniforge/constructions.hpp"

#include <algorithm>
#include <set>

#include "maniforge/poset.hpp"

namespace maniforge {

GroupPresentation b_presentation() {
  return string_presentation({4, 3, 4}, {power({0, 1, 2}, 3), power({1, 2, 3}, 3)});
}

namespace {

// Faces of rank 1 or 2 must be prisms: two 8-cycles of the two colours
// that commute with the rung colour.
bool is_octagonal_prism(const Maniplex& m, const Face& face) {
  if (face.flags.size() != 16) return false;
  const ColourSet cycle_colours = face.rank == 1 ? ColourSet{2, 3} : ColourSet{0, 1};
  std::set<Flag> seen;
  std::size_t cycles = 0;
  for (Flag u : face.flags) {
    if (seen.count(u) != 0) continue;
    const auto cycle = colour_component(m, u, cycle_colours);
    if (cycle.size() != 8) return false;
    seen.insert(cycle.begin(), cycle.end());
    ++cycles;
  }
  return cycles == 2;
}

}  // namespace

std::vector<std::string> verify_B(const Maniplex& b) {
  std::vector<std::string> failed;
  if (b.rank() != 4) return {"rank 4"};
  if (b.flag_count() != 96) failed.emplace_back("96 flags");
  if (face_vector(b) != std::vector<std::size_t>{4, 6, 6, 4}) failed.emplace_back("face vector (4,6,6,4)");
  if (!is_polytopal(b).verdict) failed.emplace_back("polytopal");
  if (!is_regular(b)) failed.emplace_back("regular");
  if (!is_self_dual(b)) failed.emplace_back("self-dual");
  for (Colour i : {0U, 3U}) {
    for (const auto& f : faces(b, i)) {
      if (is_bipartite(f.flags, b)) {
        failed.push_back(std::to_string(i) + "-faces non-bipartite");
        break;
      }
    }
  }
  for (Colour i : {1U, 2U}) {
    for (const auto& f : faces(b, i)) {
      if (!is_bipartite(f.flags, b) || !is_octagonal_prism(b, f)) {
        failed.push_back(std::to_string(i) + "-faces bipartite octagonal prisms");
        break;
      }
    }
  }
  const auto labels = face_labels(b);
  for (const auto& facet : faces(b, 3)) {
    for (const auto& vertex : faces(b, 0)) {
      std::vector<Flag> meet;
      std::set_intersection(facet.flags.begin(), facet.flags.end(), vertex.flags.begin(), vertex.flags.end(),
                            std::back_inserter(meet));
      if (meet.size() != 6 || colour_component(b, meet.front(), ColourSet{1, 2}) != meet) {
        failed.emplace_back("facet-vertex intersections are {1,2}-hexagons");
        return failed;
      }
    }
  }
  return failed;
}

Maniplex build_B() {
  auto b = maniplex_from_presentation(b_presentation(), max_cosets_from_env());
  if (auto failed = verify_B(b); !failed.empty()) throw ConstructionMismatch("B", std::move(failed));
  return b;
}

bool VoltageSupport::contains(Flag u) const { return std::binary_search(flags.begin(), flags.end(), u); }

std::pair<Face, Face> default_edges(const Maniplex& b) {
  const auto edges = faces(b, 1);
  const auto labels = face_labels(b);
  auto vertices_of = [&](const Face& e) {
    std::set<std::uint32_t> out;
    for (Flag u : e.flags) out.insert(labels.labels[0][u]);
    return out;
  };
  const auto first = vertices_of(edges.front());
  for (std::size_t k = 1; k < edges.size(); ++k) {
    const auto other = vertices_of(edges[k]);
    if (std::none_of(other.begin(), other.end(), [&](auto v) { return first.count(v) != 0; })) {
      return {edges.front(), edges[k]};
    }
  }
  throw BadEdges("no edge is vertex-disjoint from the first edge");
}

namespace {

Flag word_image(const ColouredGraph& g, Flag u, std::initializer_list<Colour> word) {
  for (Colour c : word) u = g.neighbour(u, c);
  return u;
}

class SupportSearch {
 public:
  SupportSearch(const Maniplex& b, const Face& e1, const Face& e2) : b_(b), labels_(face_labels(b)) {
    std::vector<Flag> pool = e1.flags;
    pool.insert(pool.end(), e2.flags.begin(), e2.flags.end());
    std::sort(pool.begin(), pool.end());
    in_pool_.assign(b.flag_count(), 0);
    for (Flag u : pool) in_pool_[u] = 1;
    for (Flag u : pool) {
      if (u < b.neighbour(u, 2)) links_.push_back(u);
    }
    state_.assign(b.flag_count(), kUnknown);
  }

  std::vector<VoltageSupport> run() {
    assign(0);
    std::sort(solutions_.begin(), solutions_.end());
    return solutions_;
  }

 private:
  static constexpr int kUnknown = -1;
  static constexpr int kOut = 0;
  static constexpr int kIn = 1;

  // An included flag needs its 0-, 3- and 101-images included; those maps are
  // involutions, so an excluded flag needs the same three images excluded.
  bool consistent(Flag u) const {
    for (Flag v : {b_.neighbour(u, 0), b_.neighbour(u, 3), word_image(b_, u, {1, 0, 1})}) {
      if (state_[u] == kIn && (!in_pool_[v] || state_[v] == kOut)) return false;
      if (state_[u] == kOut && state_[v] == kIn) return false;
    }
    return true;
  }

  bool counts_ok() const {
    for (Colour r : {0U, 3U}) {
      std::vector<std::size_t> count(labels_.counts[r], 0);
      for (Flag u = 0; u < b_.flag_count(); ++u) {
        if (state_[u] == kIn) ++count[labels_.labels[r][u]];
      }
      if (std::any_of(count.begin(), count.end(), [](auto c) { return c != 4; })) return false;
    }
    return true;
  }

  void assign(std::size_t k) {
    if (k == links_.size()) {
      if (!counts_ok()) return;
      VoltageSupport x;
      for (Flag u = 0; u < b_.flag_count(); ++u) {
        if (state_[u] == kIn) {
          x.flags.push_back(u);
          x.darts.push_back(Dart{u, 2});
        }
      }
      solutions_.push_back(std::move(x));
      return;
    }
    const Flag a = links_[k];
    const Flag c = b_.neighbour(a, 2);
    for (const auto& [in, out] : {std::pair{a, c}, std::pair{c, a}}) {
      state_[in] = kIn;
      state_[out] = kOut;
      if (consistent(in) && consistent(out)) assign(k + 1);
      state_[in] = kUnknown;
      state_[out] = kUnknown;
    }
  }

  const Maniplex& b_;
  FaceLabels labels_;
  std::vector<char> in_pool_;
  std::vector<Flag> links_;
  std::vector<int> state_;
  std::vector<VoltageSupport> solutions_;
};

}  // namespace

std::vector<VoltageSupport> find_voltage_support(const Maniplex& b, const Face& e1, const Face& e2) {
  if (b.rank() != 4 || e1.rank != 1 || e2.rank != 1) throw BadEdges("supports live on two edges of a 4-maniplex");
  const auto labels = face_labels(b);
  std::set<std::uint32_t> vertices1;
  for (Flag u : e1.flags) vertices1.insert(labels.labels[0][u]);
  for (Flag u : e2.flags) {
    if (vertices1.count(labels.labels[0][u]) != 0) throw BadEdges("the two edges share a vertex");
  }
  auto solutions = SupportSearch(b, e1, e2).run();
  if (solutions.empty()) throw NoSolution("no voltage support satisfies the closure conditions");
  return solutions;
}

std::vector<std::string> check_support(const Maniplex& b, const VoltageSupport& x) {
  std::vector<std::string> failed;
  for (Flag u : x.flags) {
    if (!x.contains(b.neighbour(u, 0)) || !x.contains(b.neighbour(u, 3))) {
      failed.emplace_back("closed under colours 0 and 3");
      break;
    }
  }
  for (Flag u : x.flags) {
    if (x.contains(b.neighbour(u, 1)) || x.contains(b.neighbour(u, 2))) {
      failed.emplace_back("no 1- or 2-neighbour inside");
      break;
    }
  }
  for (Flag u : x.flags) {
    if (!x.contains(word_image(b, u, {1, 0, 1}))) {
      failed.emplace_back("closed under 101");
      break;
    }
  }
  const auto labels = face_labels(b);
  for (Colour r : {0U, 3U}) {
    std::vector<std::size_t> count(labels.counts[r], 0);
    for (Flag u : x.flags) ++count[labels.labels[r][u]];
    if (std::any_of(count.begin(), count.end(), [](auto c) { return c != 4; })) {
      failed.push_back(r == 0 ? "four darts per vertex" : "four darts per facet");
    }
  }
  if (x.darts.size() != 16) failed.emplace_back("16 darts");
  return failed;
}

VoltageAssignment zeta_n(const Maniplex& b, const VoltageSupport& x, std::uint32_t n) {
  VoltageAssignment zeta(b, n);
  for (const Dart& d : x.darts) zeta.set(d.flag, d.colour, 1);
  return zeta;
}

const BFamily& b_family() {
  static const BFamily family = [] {
    auto b = build_B();
    auto [e1, e2] = default_edges(b);
    auto supports = find_voltage_support(b, e1, e2);
    return BFamily{std::move(b), std::move(e1), std::move(e2), supports.front()};
  }();
  return family;
}

Maniplex build_Bn(std::uint32_t n) {
  if (n == 0) throw Error("build_Bn requires n >= 1");
  const auto& fam = b_family();
  auto check = cover_is_maniplex(zeta_n(fam.b, fam.support, n));
  if (!check.certificate.verdict) {
    throw ConstructionMismatch("B^" + std::to_string(n), {"cover is a maniplex: " + check.certificate.witness.dump()});
  }
  return std::move(*check.cover);
}

Maniplex build_Bn_bar(std::uint32_t n) {
  auto bn = build_Bn(n);
  auto check = cover_is_maniplex(canonical_voltage(bn));
  if (!check.certificate.verdict) {
    throw ConstructionMismatch("canonical double cover of B^" + std::to_string(n),
                               {"cover is a maniplex: " + check.certificate.witness.dump()});
  }
  return std::move(*check.cover);
}

FlagMap support_rho(const Maniplex& b, const VoltageSupport& x, Colour i) {
  const Flag u = x.flags.front();
  return extend(b, u, b.neighbour(u, i));
}

FlagMap rho1_hat(const Maniplex& cover, const VoltageSupport& x, const FlagMap& rho1) {
  const auto base_flags = rho1.size();
  if (base_flags == 0 || cover.flag_count() % base_flags != 0) throw Error("rho1_hat: cover size mismatch");
  const auto n = static_cast<std::uint32_t>(cover.flag_count() / base_flags);

  std::vector<char> special(base_flags, 0);
  for (Flag v : x.flags) {
    special[v] = 1;
    special[rho1(v)] = 1;
  }
  std::vector<Flag> images(cover.flag_count());
  for (Flag v = 0; v < base_flags; ++v) {
    for (std::uint32_t g = 0; g < n; ++g) {
      const std::uint32_t negated = (n - g) % n;
      const std::uint32_t layer = special[v] ? negated : (negated + 1) % n;
      images[cover_flag(v, g, n)] = cover_flag(rho1(v), layer, n);
    }
  }
  FlagMap hat(std::move(images));
  if (auto failure = hat.commutation_failure(cover)) throw NotAutomorphism(*failure);

  const auto base = std::find_if(x.flags.begin(), x.flags.end(), [&](Flag u) {
    return rho1(u) == cover.neighbour(cover_flag(u, 0, n), 1) / n;
  });
  if (base == x.flags.end()) throw Error("rho1_hat: rho1 sends no flag of X to its 1-neighbour");
  const Flag start = cover_flag(*base, 0, n);
  if (hat(start) != cover.neighbour(start, 1)) throw NotAutomorphism(Dart{start, 1});
  return hat;
}

Maniplex raviolo(const Maniplex& m) {
  const auto n = m.rank();
  const auto f = m.flag_count();
  std::vector<std::vector<Flag>> adj(n + 1, std::vector<Flag>(2 * f));
  for (Flag u = 0; u < f; ++u) {
    for (Flag j = 0; j < 2; ++j) {
      for (Colour i = 0; i < n; ++i) adj[i][2 * u + j] = 2 * m.neighbour(u, i) + j;
      adj[n][2 * u + j] = 2 * u + (1 - j);
    }
  }
  return validate(ColouredGraph(n + 1, std::move(adj)));
}

std::vector<std::size_t> facet_vertex_cycle_lengths(const ColouredGraph& g) {
  const auto comps = components(g, ColourSet{1, 2});
  std::vector<std::size_t> sizes(comps.count, 0);
  for (auto label : comps.label) ++sizes[label];
  return sizes;
}

std::optional<Flag> find_simple_closed_walk(const ColouredGraph& g, const std::vector<Flag>& candidates,
                                            const std::vector<Colour>& colours) {
  for (Flag u : candidates) {
    auto path = trace_path(g, Walk{u, colours});
    if (path.back() != u) continue;
    path.pop_back();
    std::sort(path.begin(), path.end());
    if (std::adjacent_find(path.begin(), path.end()) == path.end()) return u;
  }
  return std::nullopt;
}

const std::vector<Colour>& petrie_nine_word() {
  static const std::vector<Colour> word{0, 1, 2, 1, 0, 1, 0, 2, 1};
  return word;
}

}  // namespace maniforge
