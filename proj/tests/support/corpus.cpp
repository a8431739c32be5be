#include "corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "maniforge/presentation.hpp"

namespace maniforge::testing {

Maniplex torus8() {
  return validate({{1, 0, 3, 2, 5, 4, 7, 6}, {7, 2, 1, 4, 3, 6, 5, 0}, {5, 4, 7, 6, 1, 0, 3, 2}}, 3);
}

ColouredGraph bad_square6() {
  return ColouredGraph(3, {{1, 0, 3, 2, 5, 4}, {3, 4, 5, 0, 1, 2}, {5, 2, 1, 4, 3, 0}});
}

Maniplex polygon(std::size_t m) { return maniplex_from_presentation(polygon_presentation(m)); }
Maniplex cube() { return maniplex_from_presentation(string_presentation({4, 3}, {})); }
Maniplex hemicube() { return maniplex_from_presentation(string_presentation({4, 3}, {power({0, 1, 2}, 3)})); }
Maniplex tetrahedron() { return maniplex_from_presentation(string_presentation({3, 3}, {})); }
Maniplex torus44(std::size_t s) {
  return maniplex_from_presentation(string_presentation({4, 4}, {power({0, 1, 2, 1}, s)}));
}

namespace {

// Cube flag (v, a, b): vertex v in {0,1}^3, the edge leaving v along axis a,
// the square through that edge orthogonal to axis b (b != a).
using CubeFlag = std::tuple<unsigned, unsigned, unsigned>;

unsigned third_axis(unsigned a, unsigned b) { return 3 - a - b; }

CubeFlag cube_move(CubeFlag f, Colour i) {
  auto [v, a, b] = f;
  switch (i) {
    case 0:
      return {v ^ (1u << a), a, b};
    case 1:
      return {v, third_axis(a, b), b};
    default:
      return {v, a, third_axis(a, b)};
  }
}

Maniplex cube_quotient(bool antipodal) {
  auto representative = [&](CubeFlag f) {
    auto [v, a, b] = f;
    if (antipodal && (v & 4u) != 0) v ^= 7u;
    return CubeFlag{v, a, b};
  };
  std::map<CubeFlag, Flag> index;
  for (unsigned v = 0; v < 8; ++v) {
    for (unsigned a = 0; a < 3; ++a) {
      for (unsigned b = 0; b < 3; ++b) {
        if (a == b) continue;
        const CubeFlag f = representative({v, a, b});
        index.emplace(f, 0);
      }
    }
  }
  Flag next = 0;
  for (auto& [f, id] : index) id = next++;
  std::vector<std::vector<Flag>> adj(3, std::vector<Flag>(index.size()));
  for (const auto& [f, id] : index) {
    for (Colour i = 0; i < 3; ++i) adj[i][id] = index.at(representative(cube_move(f, i)));
  }
  return validate(std::move(adj), 3);
}

}  // namespace

Maniplex geometric_cube() { return cube_quotient(false); }
Maniplex geometric_hemicube() { return cube_quotient(true); }

VoltageAssignment half_support_voltage(std::uint32_t n) {
  const auto& fam = b_family();
  VoltageAssignment z(fam.b, n);
  for (const auto& d : fam.support.darts) {
    if (std::binary_search(fam.e1.flags.begin(), fam.e1.flags.end(), d.flag)) z.set(d.flag, d.colour, 1);
  }
  return z;
}

ColouredGraph face_graph(const ColouredGraph& g, const Face& f) {
  std::map<Flag, Flag> local;
  for (Flag u : f.flags) local.emplace(u, static_cast<Flag>(local.size()));
  std::vector<std::vector<Flag>> adj;
  for (Colour c = 0; c < g.rank(); ++c) {
    if (c == f.rank) continue;
    std::vector<Flag> row(f.flags.size());
    for (const auto& [u, lu] : local) row[lu] = local.at(g.neighbour(u, c));
    adj.push_back(std::move(row));
  }
  return ColouredGraph(g.rank() - 1, std::move(adj));
}

std::vector<std::size_t> brute_face_vector(const ColouredGraph& g) {
  std::vector<std::size_t> counts;
  for (Colour i = 0; i < g.rank(); ++i) {
    std::vector<Flag> parent(g.flag_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Flag x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (Colour c = 0; c < g.rank(); ++c) {
      if (c == i) continue;
      for (Flag u = 0; u < g.flag_count(); ++u) parent[find(u)] = find(g.neighbour(u, c));
    }
    std::size_t roots = 0;
    for (Flag u = 0; u < g.flag_count(); ++u) roots += find(u) == u;
    counts.push_back(roots);
  }
  return counts;
}

const std::vector<NamedManiplex>& corpus() {
  static const std::vector<NamedManiplex> items = [] {
    std::vector<NamedManiplex> v;
    for (std::size_t m : {3, 4, 5, 6}) v.push_back({"polygon" + std::to_string(m), polygon(m)});
    v.push_back({"cube", cube()});
    v.push_back({"hemicube", hemicube()});
    v.push_back({"tetrahedron", tetrahedron()});
    v.push_back({"torus44_2", torus44(2)});
    v.push_back({"torus44_3", torus44(3)});
    v.push_back({"torus8", torus8()});
    v.push_back({"B", b_family().b});
    v.push_back({"Bbar", build_Bn_bar(1)});
    v.push_back({"B2", build_Bn(2)});
    v.push_back({"B3", build_Bn(3)});
    v.push_back({"Bbar2", build_Bn_bar(2)});
    v.push_back({"half2", *cover_is_maniplex(half_support_voltage(2)).cover});
    return v;
  }();
  return items;
}

Gen::Gen() : Gen([] {
  const char* s = std::getenv("MANIFORGE_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 20261015ull;
}()) {}

std::vector<Colour> Gen::word(std::size_t rank, std::size_t length) {
  std::vector<Colour> w(length);
  for (auto& c : w) c = static_cast<Colour>(below(rank));
  return w;
}

VoltageAssignment Gen::voltage(const Maniplex& base, std::uint32_t m) {
  VoltageAssignment z(base, m);
  for (Flag u = 0; u < base.flag_count(); ++u) {
    for (Colour i = 0; i < base.rank(); ++i) {
      if (u < base.neighbour(u, i)) z.set(u, i, between(0, m - 1));
    }
  }
  return z;
}

VoltageAssignment Gen::reduced_voltage(const Maniplex& base, std::uint32_t m, double density) {
  std::set<std::pair<Flag, Colour>> tree;
  for (const auto& d : spanning_tree(base)) {
    tree.emplace(std::min(d.flag, base.neighbour(d.flag, d.colour)), d.colour);
  }
  VoltageAssignment z(base, m);
  std::bernoulli_distribution hit(density);
  for (Flag u = 0; u < base.flag_count(); ++u) {
    for (Colour i = 0; i < base.rank(); ++i) {
      if (u < base.neighbour(u, i) && !tree.contains({u, i}) && hit(rng_)) z.set(u, i, between(0, m - 1));
    }
  }
  return z;
}

}  // namespace maniforge::testing
