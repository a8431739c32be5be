#include "maniforge/voltage.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace maniforge {

using nlohmann::json;

namespace {

std::uint32_t reduce(std::int64_t value, std::uint32_t m) {
  const auto r = value % static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

}  // namespace

VoltageAssignment::VoltageAssignment(Maniplex base, std::uint32_t modulus)
    : base_(std::move(base)), modulus_(modulus) {
  if (modulus_ == 0) throw Error("voltage modulus must be positive");
  values_.assign(base_.rank() * base_.flag_count(), 0);
}

void VoltageAssignment::set(Flag u, Colour i, std::int64_t value) {
  if (i >= base_.rank()) throw ColourOutOfRange(i, base_.rank());
  if (u >= base_.flag_count()) throw Error("flag " + std::to_string(u) + " out of range");
  const auto g = reduce(value, modulus_);
  values_[index(u, i)] = g;
  values_[index(base_.neighbour(u, i), i)] = negate(g);
}

VoltageAssignment VoltageAssignment::from_table(Maniplex base, std::uint32_t modulus,
                                                const std::vector<std::vector<std::uint32_t>>& values) {
  VoltageAssignment zeta(std::move(base), modulus);
  const auto& b = zeta.base();
  if (values.size() != b.rank()) throw Error("voltage table needs one row per colour");
  for (Colour i = 0; i < b.rank(); ++i) {
    if (values[i].size() != b.flag_count()) throw Error("voltage table row has the wrong length");
    for (Flag u = 0; u < b.flag_count(); ++u) {
      const Flag v = b.neighbour(u, i);
      if (reduce(values[i][u], modulus) != zeta.negate(reduce(values[i][v], modulus))) {
        throw Error("inverse condition fails on the colour-" + std::to_string(i) + " link at flag " +
                    std::to_string(u));
      }
      zeta.values_[zeta.index(u, i)] = reduce(values[i][u], modulus);
    }
  }
  return zeta;
}

std::size_t VoltageAssignment::nonzero_dart_count() const {
  return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(), [](auto v) { return v != 0; }));
}

std::uint32_t net_voltage(const VoltageAssignment& zeta, const Walk& w) {
  const auto flags = trace_path(zeta.base(), w);
  std::uint32_t net = 0;
  for (std::size_t k = w.colours.size(); k-- > 0;) net = zeta.add(zeta(flags[k], w.colours[k]), net);
  return net;
}

ColouredGraph derived_cover(const VoltageAssignment& zeta) {
  const auto& b = zeta.base();
  const auto m = zeta.modulus();
  std::vector<std::vector<Flag>> adj(b.rank(), std::vector<Flag>(b.flag_count() * m));
  for (Colour i = 0; i < b.rank(); ++i) {
    for (Flag u = 0; u < b.flag_count(); ++u) {
      const Flag v = b.neighbour(u, i);
      const auto shift = zeta(u, i);
      for (std::uint32_t g = 0; g < m; ++g) adj[i][cover_flag(u, g, m)] = cover_flag(v, zeta.add(shift, g), m);
    }
  }
  return ColouredGraph(b.rank(), std::move(adj));
}

CoverCheck cover_is_maniplex(const VoltageAssignment& zeta) {
  CoverCheck out;
  out.certificate.property = "cover_is_maniplex";
  const auto& b = zeta.base();
  for (Colour i = 0; i < b.rank(); ++i) {
    for (Colour j = i + 2; j < b.rank(); ++j) {
      for (Flag u = 0; u < b.flag_count(); ++u) {
        const auto net = net_voltage(zeta, Walk{u, {i, j, i, j}});
        if (net != 0) {
          out.certificate.witness = json{{"reason", "square"}, {"flag", u}, {"colours", {i, j}}, {"net_voltage", net}};
          return out;
        }
      }
    }
  }
  auto cover = derived_cover(zeta);
  const auto reached = colour_component(cover, 0, ColourSet::all(cover.rank()));
  if (reached.size() != cover.flag_count()) {
    out.certificate.witness = json{{"reason", "disconnected"}, {"component_of_flag_0", reached.size()},
                                   {"cover_flags", cover.flag_count()}};
    return out;
  }
  out.certificate.verdict = true;
  out.certificate.witness = json{{"cover_flags", cover.flag_count()}};
  try {
    out.cover = validate(std::move(cover));
  } catch (const ValidationError& e) {
    throw std::logic_error(std::string("cover passed the voltage criteria but failed validation: ") + e.what());
  }
  return out;
}

namespace {

struct BfsTree {
  std::vector<Flag> parent;
  std::vector<Colour> parent_colour;
  std::vector<Dart> tree_darts;
};

BfsTree bfs_tree(const ColouredGraph& g) {
  BfsTree t;
  const auto n = g.flag_count();
  t.parent.assign(n, n);
  t.parent_colour.assign(n, 0);
  std::vector<Flag> queue{0};
  t.parent[0] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Flag u = queue[k];
    for (Colour i = 0; i < g.rank(); ++i) {
      const Flag v = g.neighbour(u, i);
      if (t.parent[v] == n) {
        t.parent[v] = u;
        t.parent_colour[v] = i;
        t.tree_darts.push_back(Dart{u, i});
        queue.push_back(v);
      }
    }
  }
  if (queue.size() != n) throw Error("spanning tree requested for a disconnected graph");
  return t;
}

// Colours from the root down to u.
std::vector<Colour> path_from_root(const BfsTree& t, Flag u) {
  std::vector<Colour> up;
  while (u != 0) {
    up.push_back(t.parent_colour[u]);
    u = t.parent[u];
  }
  return {up.rbegin(), up.rend()};
}

}  // namespace

std::vector<Dart> spanning_tree(const ColouredGraph& g) { return bfs_tree(g).tree_darts; }

Walk fundamental_cycle(const ColouredGraph& g, Dart link) {
  const auto t = bfs_tree(g);
  Walk w{0, path_from_root(t, link.flag)};
  w.colours.push_back(link.colour);
  const auto back = path_from_root(t, g.neighbour(link.flag, link.colour));
  w.colours.insert(w.colours.end(), back.rbegin(), back.rend());
  return w;
}

Connectivity cover_connected(const VoltageAssignment& zeta) {
  Connectivity out;
  out.connected = is_connected(derived_cover(zeta));
  const auto tree = spanning_tree(zeta.base());
  const bool reduced = std::all_of(tree.begin(), tree.end(), [&](const Dart& d) { return zeta(d) == 0; });
  if (reduced) {
    std::uint32_t gcd = zeta.modulus();
    for (Colour i = 0; i < zeta.base().rank(); ++i) {
      for (Flag u = 0; u < zeta.base().flag_count(); ++u) gcd = std::gcd(gcd, zeta(u, i));
    }
    out.generation_criterion = (gcd == 1);
    if (*out.generation_criterion != out.connected) {
      throw std::logic_error("cover connectivity disagrees with the generation criterion on a tree-reduced assignment");
    }
  }
  return out;
}

ColouredGraph canonical_double_cover(const ColouredGraph& g) {
  std::vector<std::vector<Flag>> adj(g.rank(), std::vector<Flag>(g.flag_count() * 2));
  for (Colour i = 0; i < g.rank(); ++i) {
    for (Flag u = 0; u < g.flag_count(); ++u) {
      const Flag v = g.neighbour(u, i);
      for (std::uint32_t layer = 0; layer < 2; ++layer) {
        // A fixed point is an absent link and stays in its layer.
        const std::uint32_t target = (v == u) ? layer : 1 - layer;
        adj[i][cover_flag(u, layer, 2)] = cover_flag(v, target, 2);
      }
    }
  }
  return ColouredGraph(g.rank(), std::move(adj));
}

VoltageAssignment canonical_voltage(const Maniplex& m) {
  VoltageAssignment zeta(m, 2);
  for (Colour i = 0; i < m.rank(); ++i) {
    for (Flag u = 0; u < m.flag_count(); ++u) zeta.set(u, i, 1);
  }
  return zeta;
}

namespace {

std::size_t count_face_components(const std::vector<std::uint32_t>& cover_labels, const std::vector<Flag>& face,
                                  std::uint32_t m) {
  std::set<std::uint32_t> seen;
  for (Flag u : face) {
    for (std::uint32_t g = 0; g < m; ++g) seen.insert(cover_labels[cover_flag(u, g, m)]);
  }
  return seen.size();
}

}  // namespace

std::size_t fibre_components(const VoltageAssignment& zeta, const Face& face) {
  const auto cover = derived_cover(zeta);
  const auto comps = components(cover, ColourSet::all_but(cover.rank(), face.rank));
  return count_face_components(comps.label, face.flags, zeta.modulus());
}

std::vector<std::optional<std::size_t>> fibre_profile(const VoltageAssignment& zeta) {
  const auto cover = derived_cover(zeta);
  std::vector<std::optional<std::size_t>> out;
  for (Colour i = 0; i < zeta.base().rank(); ++i) {
    const auto comps = components(cover, ColourSet::all_but(cover.rank(), i));
    std::optional<std::size_t> common;
    bool uniform = true;
    for (const auto& face : faces(zeta.base(), i)) {
      const auto count = count_face_components(comps.label, face.flags, zeta.modulus());
      if (common && *common != count) uniform = false;
      common = count;
    }
    out.push_back(uniform ? common : std::nullopt);
  }
  return out;
}

bool is_alternately_connected(const VoltageAssignment& zeta) {
  if (zeta.base().rank() != 4) return false;
  const auto m = static_cast<std::size_t>(zeta.modulus());
  const auto profile = fibre_profile(zeta);
  return profile[0] == 1U && profile[1] == m && profile[2] == m && profile[3] == 1U;
}

FlagMap check_lift(const VoltageAssignment& zeta, const FlagMap& phi, std::int64_t multiplier) {
  const auto& b = zeta.base();
  const auto m = zeta.modulus();
  const auto f = reduce(multiplier, m);
  if (std::gcd(f, m) != 1) throw Error("multiplier " + std::to_string(multiplier) + " is not a unit mod " + std::to_string(m));
  if (!phi.is_automorphism_of(b)) throw Error("check_lift: phi is not an automorphism of the base");
  for (Colour i = 0; i < b.rank(); ++i) {
    for (Flag u = 0; u < b.flag_count(); ++u) {
      const auto expected = reduce(static_cast<std::int64_t>(f) * zeta(u, i), m);
      if (zeta(phi(u), i) != expected) throw NoLift(Dart{u, i});
    }
  }
  std::vector<Flag> images(b.flag_count() * m);
  for (Flag u = 0; u < b.flag_count(); ++u) {
    for (std::uint32_t g = 0; g < m; ++g) {
      images[cover_flag(u, g, m)] = cover_flag(phi(u), reduce(static_cast<std::int64_t>(f) * g, m), m);
    }
  }
  FlagMap lift(std::move(images));
  if (!lift.is_automorphism_of(derived_cover(zeta))) {
    throw std::logic_error("compatible voltages produced a lift that is not an automorphism");
  }
  return lift;
}

FlagMap layer_translation(std::size_t base_flags, std::uint32_t modulus, std::uint32_t shift) {
  std::vector<Flag> images(base_flags * modulus);
  for (Flag u = 0; u < base_flags; ++u) {
    for (std::uint32_t g = 0; g < modulus; ++g) {
      images[cover_flag(u, g, modulus)] = cover_flag(u, (g + shift) % modulus, modulus);
    }
  }
  return FlagMap(std::move(images));
}

VoltageAssignment read_voltage(std::istream& in, const Maniplex& base) {
  std::string raw;
  std::size_t number = 0;
  std::optional<VoltageAssignment> zeta;
  std::set<std::pair<Flag, Colour>> listed;
  auto parse = [&](const std::string& tok) -> std::uint64_t {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18) {
      throw ParseError(number, "expected a non-negative integer, got '" + tok + "'");
    }
    return std::stoull(tok);
  };
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (!zeta) {
      if (tokens.size() != 2 || tokens[0] != "volt") throw ParseError(number, "expected 'volt <m>'");
      const auto m = parse(tokens[1]);
      if (m == 0 || m > UINT32_MAX) throw ParseError(number, "modulus out of range");
      zeta.emplace(base, static_cast<std::uint32_t>(m));
      continue;
    }
    if (tokens.size() != 3) throw ParseError(number, "expected 'u i value'");
    const auto u = parse(tokens[0]);
    const auto i = parse(tokens[1]);
    const auto value = parse(tokens[2]);
    if (u >= base.flag_count()) throw ParseError(number, "flag " + tokens[0] + " out of range");
    if (i >= base.rank()) throw ParseError(number, "colour " + tokens[1] + " out of range");
    const auto flag = static_cast<Flag>(u);
    const auto colour = static_cast<Colour>(i);
    const Flag other = base.neighbour(flag, colour);
    const auto g = reduce(static_cast<std::int64_t>(value % zeta->modulus()), zeta->modulus());
    if (listed.count({flag, colour}) != 0) throw ParseError(number, "dart listed twice");
    if (listed.count({other, colour}) != 0 && (*zeta)(flag, colour) != g) {
      throw ParseError(number, "dart contradicts the value implied by its reverse");
    }
    listed.insert({flag, colour});
    zeta->set(flag, colour, g);
  }
  if (!zeta) throw ParseError(number + 1, "missing 'volt <m>' header");
  return std::move(*zeta);
}

void write_voltage(std::ostream& out, const VoltageAssignment& zeta) {
  const auto& b = zeta.base();
  out << "volt " << zeta.modulus() << '\n';
  for (Flag u = 0; u < b.flag_count(); ++u) {
    for (Colour i = 0; i < b.rank(); ++i) {
      if (u < b.neighbour(u, i) && zeta(u, i) != 0) out << u << ' ' << i << ' ' << zeta(u, i) << '\n';
    }
  }
}

}  // namespace maniforge
