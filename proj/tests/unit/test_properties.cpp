#include <doctest.h>

#include <numeric>
#include <set>

#include "corpus.hpp"
#include "maniforge/poset.hpp"
#include "maniforge/symmetry.hpp"
#include "maniforge/voltage.hpp"

using namespace maniforge;
using namespace maniforge::testing;

namespace {

constexpr int kCases = 400;

// A corpus member, or a random cover of B: zeta_n, its double cover, or a half support.
Maniplex sample(Gen& gen) {
  switch (gen.below(4)) {
    case 0:
      return build_Bn(gen.between(1, 5));
    case 1:
      return build_Bn_bar(gen.between(1, 3));
    case 2:
      return *cover_is_maniplex(half_support_voltage(gen.between(2, 4))).cover;
    default:
      return gen.pick(corpus()).m;
  }
}

// Rank-3 maniplexes: small polyhedra and maps, and facets or vertex figures of covers.
Maniplex sample_rank3(Gen& gen) {
  switch (gen.below(4)) {
    case 0:
      return torus44(gen.between(1, 5));
    case 1: {
      const auto m = build_Bn(gen.between(1, 4));
      const auto fs = faces(m, gen.coin() ? 3 : 0);
      return validate(face_graph(m, gen.pick(fs)));
    }
    case 2: {
      const std::vector<Maniplex> ms{cube(), hemicube(), tetrahedron(), torus8()};
      return gen.pick(ms);
    }
    default: {
      const auto m = build_Bn_bar(gen.between(1, 2));
      return validate(face_graph(m, gen.pick(faces(m, 3))));
    }
  }
}

std::vector<std::vector<Flag>> component_sets(const ColouredGraph& g) {
  const auto labels = components(g, ColourSet::all(g.rank()));
  std::vector<std::vector<Flag>> sets(labels.count);
  for (Flag u = 0; u < g.flag_count(); ++u) sets[labels.label[u]].push_back(u);
  return sets;
}

}  // namespace

TEST_CASE("links of a faithful maniplex join distinct faces of their rank") {
  Gen gen;
  INFO("seed " << gen.seed());
  for (int k = 0; k < kCases; ++k) {
    const auto m = sample(gen);
    const bool faithful = is_faithful(m).verdict;
    const auto fl = face_labels(m);
    bool inside = false;
    for (int t = 0; t < 64; ++t) {
      const Flag u = static_cast<Flag>(gen.below(m.flag_count()));
      const auto i = static_cast<Colour>(gen.below(m.rank()));
      inside = inside || fl.labels[i][u] == fl.labels[i][m.neighbour(u, i)];
    }
    if (faithful) CHECK_FALSE(inside);
  }
  // the unfaithful torus has a link inside its only vertex
  const auto t = torus8();
  CHECK(face_labels(t).labels[0][0] == face_labels(t).labels[0][t.neighbour(0, 0)]);
}

TEST_CASE("edges and 2-faces of faithful 4-maniplexes are bipartite") {
  Gen gen;
  INFO("seed " << gen.seed());
  for (int k = 0; k < kCases; ++k) {
    const auto m = sample(gen);
    if (m.rank() != 4 || !is_faithful(m).verdict) continue;
    for (Colour r : {1u, 2u}) {
      const auto fs = faces(m, r);
      CHECK(is_bipartite(gen.pick(fs).flags, m));
    }
  }
}

TEST_CASE("faithful thin rank-3 maniplexes are polytopal") {
  Gen gen;
  INFO("seed " << gen.seed());
  std::size_t hits = 0;
  for (int k = 0; k < kCases; ++k) {
    const auto m = sample_rank3(gen);
    const bool thin = is_thin(m).verdict;
    const bool faithful = is_faithful(m).verdict;
    if (!thin) continue;
    const bool strong = is_strongly_connected(build_poset(m)).verdict;
    CHECK(is_polytopal(m).verdict == strong);
    if (faithful) {
      ++hits;
      CHECK(strong);
      CHECK(has_cip(m).verdict);
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("canonical double covers") {
  Gen gen;
  INFO("seed " << gen.seed());
  for (int k = 0; k < kCases / 2; ++k) {
    ColouredGraph g = sample(gen);
    if (gen.coin() && g.rank() > 1) {
      // a face with its own colours
      const auto fs = faces(g, static_cast<Colour>(gen.below(g.rank())));
      g = face_graph(g, gen.pick(fs));
    }
    const auto c = canonical_double_cover(g);
    CHECK(c.flag_count() == 2 * g.flag_count());
    CHECK(is_bipartite(c));
    const bool base_bip = is_bipartite(g);
    CHECK(is_connected(c) == !base_bip);
    if (base_bip) {
      const auto sets = component_sets(c);
      REQUIRE(sets.size() == 2);
      for (const auto& s : sets) {
        CHECK(are_isomorphic(induced_subgraph(c, s, ColourSet::all(c.rank())), g));
      }
    }
  }
}

TEST_CASE("connectivity agrees with generation for reduced assignments") {
  Gen gen;
  INFO("seed " << gen.seed());
  std::size_t connected = 0;
  std::size_t disconnected = 0;
  for (int k = 0; k < kCases; ++k) {
    const auto base = gen.pick(corpus()).m;
    const auto m = gen.between(2, 9);
    const double density = gen.pick(std::vector<double>{0.0, 0.002, 0.01, 0.05, 0.3});
    const auto z = gen.reduced_voltage(base, m, density);
    const auto c = cover_connected(z);
    REQUIRE(c.generation_criterion.has_value());
    std::uint32_t g = m;
    for (Flag u = 0; u < base.flag_count(); ++u) {
      for (Colour i = 0; i < base.rank(); ++i) g = std::gcd(g, z(u, i));
    }
    const bool direct = components(derived_cover(z), ColourSet::all(base.rank())).count == 1;
    CHECK(c.connected == direct);
    CHECK(*c.generation_criterion == (g == 1));
    CHECK(direct == (g == 1));
    (direct ? connected : disconnected) += 1;
  }
  CHECK(connected > 0);
  CHECK(disconnected > 0);
}

TEST_CASE("closed walks lift to closed walks exactly when their net voltage vanishes") {
  Gen gen;
  INFO("seed " << gen.seed());
  std::size_t zero = 0;
  std::size_t nonzero = 0;
  for (int k = 0; k < kCases / 2; ++k) {
    const auto base = gen.pick(corpus()).m;
    const auto m = gen.between(2, 7);
    const auto z = gen.coin() ? gen.voltage(base, m) : gen.reduced_voltage(base, m, 0.05);
    const auto cover = derived_cover(z);
    std::set<std::pair<Flag, Colour>> tree;
    for (const auto& d : spanning_tree(base)) tree.emplace(std::min(d.flag, base.neighbour(d.flag, d.colour)), d.colour);
    for (int t = 0; t < 16; ++t) {
      const Flag u = static_cast<Flag>(gen.below(base.flag_count()));
      const auto i = static_cast<Colour>(gen.below(base.rank()));
      const Flag v = base.neighbour(u, i);
      if (tree.contains({std::min(u, v), i})) continue;
      const auto w = fundamental_cycle(base, {u, i});
      REQUIRE(trace(base, w) == w.start);
      const auto layer = gen.between(0, m - 1);
      const Flag start = cover_flag(w.start, layer, m);
      const bool closed = trace(cover, {start, w.colours}) == start;
      const auto net = net_voltage(z, w);
      CHECK(closed == (net == 0));
      (net == 0 ? zero : nonzero) += 1;
    }
    // arbitrary walks end in the layer shifted by their net voltage
    for (int t = 0; t < 8; ++t) {
      const Walk w{static_cast<Flag>(gen.below(base.flag_count())), gen.word(base.rank(), gen.below(30))};
      const auto layer = gen.between(0, m - 1);
      const Flag end = trace(cover, {cover_flag(w.start, layer, m), w.colours});
      CHECK(end == cover_flag(trace(base, w), (layer + net_voltage(z, w)) % m, m));
    }
  }
  CHECK(zero > 0);
  CHECK(nonzero > 0);
}
