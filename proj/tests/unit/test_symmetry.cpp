#include <doctest.h>

#include "corpus.hpp"
#include "maniforge/error.hpp"
#include "maniforge/symmetry.hpp"

using namespace maniforge;
using namespace maniforge::testing;

namespace {

// Exhaustive count of automorphisms: every target of flag 0 whose
// propagation is a permutation commuting with all colours.
std::size_t brute_aut_order(const ColouredGraph& g) {
  std::size_t count = 0;
  for (Flag v = 0; v < g.flag_count(); ++v) {
    std::vector<Flag> image(g.flag_count(), g.flag_count());
    std::vector<Flag> stack{0};
    image[0] = v;
    while (!stack.empty()) {
      const Flag w = stack.back();
      stack.pop_back();
      for (Colour i = 0; i < g.rank(); ++i) {
        const Flag x = g.neighbour(w, i);
        if (image[x] == g.flag_count()) {
          image[x] = g.neighbour(image[w], i);
          stack.push_back(x);
        }
      }
    }
    count += FlagMap(image).is_automorphism_of(g);
  }
  return count;
}

}  // namespace

TEST_CASE("flag maps") {
  const auto id = FlagMap::identity(5);
  CHECK(id.is_identity());
  const FlagMap p({1, 2, 0, 4, 3});
  CHECK(p.then(p.inverse()).is_identity());
  CHECK(p.then(p)(0) == 2);
  CHECK_FALSE(p.is_identity());
}

TEST_CASE("extension") {
  const auto& b = b_family().b;
  CHECK(extend(b, 7, 7).is_identity());
  for (Flag v = 0; v < b.flag_count(); ++v) {
    const auto phi = extend(b, 0, v);
    CHECK(phi(0) == v);
    CHECK(phi.is_automorphism_of(b));
  }
}

TEST_CASE("extension fails on a non-regular cover") {
  const auto half = *cover_is_maniplex(half_support_voltage(2)).cover;
  std::size_t failures = 0;
  for (Flag v = 0; v < half.flag_count(); ++v) {
    Flag conflict = 0;
    if (!try_extend(half, 0, v, &conflict)) {
      ++failures;
      CHECK(conflict < half.flag_count());
    }
  }
  CHECK(failures == 192 - 32);
  Flag target = 0;
  while (try_extend(half, 0, target)) ++target;
  CHECK_THROWS_AS(extend(half, 0, target), NoExtension);
  CHECK_FALSE(is_regular(half));
}

TEST_CASE("automorphism counts") {
  CHECK(aut_order(b_family().b) == 96);
  for (std::size_t m = 3; m <= 8; ++m) CHECK(aut_order(polygon(m)) == 2 * m);
  CHECK(aut_order(torus8()) == 8);
  for (const auto& [name, m] : corpus()) {
    INFO(name);
    CHECK(aut_order(m) == brute_aut_order(m));
  }
  for (const auto& m : {cube(), hemicube(), polygon(5), b_family().b}) {
    CHECK(aut_order(raviolo(m)) == 2 * aut_order(m));
  }
}

TEST_CASE("regularity") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    CHECK(is_regular(build_Bn(n)));
    CHECK(is_regular(build_Bn_bar(n)));
  }
}

TEST_CASE("isomorphism") {
  const auto& b = b_family().b;
  CHECK(are_isomorphic(b, dual(b)));
  CHECK_FALSE(are_isomorphic(b, build_Bn_bar(1)));
  CHECK(are_isomorphic(cube(), geometric_cube()));
  CHECK(are_isomorphic(hemicube(), geometric_hemicube()));
  CHECK_FALSE(are_isomorphic(cube(), dual(cube())));

  // the canonical double cover of an edge splits into two copies of it
  for (const auto& e : faces(b, 1)) {
    const auto sub = induced_subgraph(b, e.flags, ColourSet::all_but(4, 1));
    const auto cover = canonical_double_cover(sub);
    const auto labels = components(cover, ColourSet::all(4));
    std::size_t nontrivial = 0;
    for (std::uint32_t c = 0; c < labels.count; ++c) {
      std::vector<Flag> piece;
      for (Flag u = 0; u < cover.flag_count(); ++u) {
        if (labels.label[u] == c) piece.push_back(u);
      }
      if (piece.size() < 2) continue;
      ++nontrivial;
      CHECK(are_isomorphic(face_graph(cover, Face{1, 0, piece}), face_graph(b, e)));
    }
    CHECK(nontrivial == 2);
  }
}

TEST_CASE("isomorphism is an equivalence on the corpus") {
  const auto& items = corpus();
  for (const auto& [na, a] : items) {
    for (const auto& [nb, b] : items) {
      const bool ab = are_isomorphic(a, b);
      CHECK(ab == are_isomorphic(b, a));
      if (ab) {
        CHECK(face_vector(a) == face_vector(b));
        CHECK(aut_order(a) == aut_order(b));
      }
      if (&a == &b) CHECK(ab);
    }
  }
}

TEST_CASE("self-duality") {
  CHECK(is_self_dual(b_family().b));
  for (std::size_t m = 3; m <= 7; ++m) CHECK(is_self_dual(polygon(m)));
  CHECK_FALSE(is_self_dual(cube()));
  const auto r = raviolo(b_family().b);
  CHECK_FALSE(is_self_dual(r));
  const auto fv = face_vector(r);
  CHECK(fv.front() == 4);
  CHECK(fv.back() == 2);
}
