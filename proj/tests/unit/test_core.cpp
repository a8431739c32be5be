#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "maniforge/coloured_graph.hpp"
#include "maniforge/error.hpp"
#include "maniforge/maniplex.hpp"
#include "maniforge/mpx_io.hpp"
#include "maniforge/symmetry.hpp"

using namespace maniforge;
using namespace maniforge::testing;

namespace {

ValidationErrorKind violation_of(const ColouredGraph& g) {
  const auto v = find_violation(g);
  REQUIRE(v.has_value());
  return v->kind();
}

}  // namespace

TEST_CASE("colour sets") {
  const ColourSet s{0, 2, 3};
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(s.complement(4) == ColourSet{1});
  CHECK(ColourSet::all_but(4, 3) == ColourSet{0, 1, 2});
  CHECK(s.members() == std::vector<Colour>{0, 2, 3});
  CHECK(s.span() == 4);
  CHECK(ColourSet{}.empty());
  CHECK(ColourSet{1}.subset_of(s.with(1)));
}

TEST_CASE("polygon flag graphs validate") {
  for (std::size_t m = 2; m <= 9; ++m) {
    std::vector<std::vector<Flag>> adj(2, std::vector<Flag>(2 * m));
    for (Flag u = 0; u < 2 * m; ++u) {
      adj[0][u] = u ^ 1u;
      adj[1][u] = u % 2 == 1 ? (u + 1) % (2 * m) : (u + 2 * m - 1) % (2 * m);
    }
    const auto p = validate(adj, 2);
    CHECK(p.flag_count() == 2 * m);
    CHECK(face_vector(p) == std::vector<std::size_t>{m, m});
    CHECK(are_isomorphic(p, polygon(m)));
  }
}

TEST_CASE("validation reports the violated axiom") {
  SUBCASE("bad square") {
    CHECK(violation_of(bad_square6()) == ValidationErrorKind::BadSquare);
    try {
      validate(bad_square6());
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ValidationErrorKind::BadSquare);
      CHECK(e.colour() == 0);
      CHECK(e.other_colour() == 2);
    }
  }
  SUBCASE("fixed point") {
    CHECK(violation_of(ColouredGraph(2, {{1, 0, 3, 2}, {0, 2, 1, 3}})) == ValidationErrorKind::FixedPoint);
  }
  SUBCASE("not an involution") {
    CHECK(violation_of(ColouredGraph(2, {{1, 2, 0, 3}, {3, 2, 1, 0}})) == ValidationErrorKind::NotInvolution);
  }
  SUBCASE("not simple") {
    CHECK(violation_of(ColouredGraph(2, {{1, 0, 3, 2}, {1, 0, 3, 2}})) == ValidationErrorKind::NotSimple);
  }
  SUBCASE("disconnected") {
    const auto g = ColouredGraph(2, {{1, 0, 3, 2, 5, 4, 7, 6}, {3, 2, 1, 0, 7, 6, 5, 4}});
    const auto v = find_violation(g);
    REQUIRE(v);
    CHECK(v->kind() == ValidationErrorKind::Disconnected);
    CHECK(v->flag() == 4);
  }
  SUBCASE("malformed") {
    CHECK_THROWS_AS(ColouredGraph(2, {{1, 0}, {1}}), ValidationError);
    CHECK_THROWS_AS(ColouredGraph(1, {{1, 7}}), ValidationError);
    CHECK_THROWS_AS(validate({{1, 0}}, 2), ValidationError);
  }
  SUBCASE("B re-validates") {
    const auto& b = b_family().b;
    CHECK_FALSE(find_violation(b).has_value());
    CHECK(validate(b.table(), 4).flag_count() == 96);
  }
}

TEST_CASE("colour components") {
  const auto& b = b_family().b;
  CHECK(colour_component(b, 17, ColourSet{}) == std::vector<Flag>{17});
  CHECK(colour_component(b, 0, ColourSet::all(4)).size() == 96);
  for (Flag u = 0; u < b.flag_count(); u += 7) CHECK(colour_component(b, u, ColourSet{1, 2}).size() == 6);
  CHECK(components(b, ColourSet{1, 2}).count == 16);
  CHECK(is_connected(b));
}

TEST_CASE("faces") {
  const auto& b = b_family().b;
  CHECK(faces(b, 0).size() == 4);
  CHECK(faces(b, 1).size() == 6);
  CHECK(faces(b, 2).size() == 6);
  CHECK(faces(b, 3).size() == 4);
  CHECK(faces(build_Bn_bar(1), 1).size() == 12);
  CHECK(face_vector(b) == brute_face_vector(b));

  const auto p = polygon(7);
  const auto vs = faces(p, 0);
  CHECK(vs.size() == 7);
  for (const auto& f : vs) {
    REQUIRE(f.flags.size() == 2);
    CHECK(p.neighbour(f.flags[0], 1) == f.flags[1]);
  }

  // ids follow least flags
  for (Colour i = 0; i < 4; ++i) {
    const auto fs = faces(b, i);
    for (std::size_t k = 1; k < fs.size(); ++k) CHECK(fs[k - 1].flags.front() < fs[k].flags.front());
  }
  for (const auto& [name, m] : corpus()) {
    INFO(name);
    CHECK(face_vector(m) == brute_face_vector(m));
  }
}

TEST_CASE("duality") {
  const auto& b = b_family().b;
  CHECK(dual(dual(b)) == b);
  CHECK(are_isomorphic(b, dual(b)));
  CHECK(are_isomorphic(polygon(5), dual(polygon(5))));
  const auto c = cube();
  const auto fv = face_vector(dual(c));
  CHECK(fv == std::vector<std::size_t>{6, 12, 8});
}

TEST_CASE("walks") {
  const auto& b = b_family().b;
  CHECK(trace(b, {5, {}}) == 5);
  for (Colour i = 0; i < 4; ++i) CHECK(trace(b, {5, {i, i}}) == 5);
  const auto path = trace_path(b, {3, {0, 1}});
  CHECK(path == std::vector<Flag>{3, b.neighbour(3, 0), b.neighbour(b.neighbour(3, 0), 1)});

  const auto w = petrie_nine_word();
  bool closed = false;
  for (const auto& f : faces(b, 3)) {
    for (Flag u : f.flags) {
      auto p = trace_path(b, {u, w});
      std::sort(p.begin(), p.end() - 1);
      if (p.back() == u && std::adjacent_find(p.begin(), p.end() - 1) == p.end() - 1) closed = true;
    }
  }
  CHECK(closed);
  CHECK(find_simple_closed_walk(b, faces(b, 3).front().flags, w).has_value());
}

TEST_CASE("bipartiteness") {
  const auto& b = b_family().b;
  for (const auto& f : faces(b, 1)) CHECK(is_bipartite(f.flags, b));
  for (const auto& f : faces(b, 2)) CHECK(is_bipartite(f.flags, b));
  for (const auto& f : faces(b, 3)) CHECK_FALSE(is_bipartite(f.flags, b));
  for (const auto& f : faces(b, 0)) CHECK_FALSE(is_bipartite(f.flags, b));
  CHECK_FALSE(is_bipartite(b));
  CHECK(is_bipartite(cube()));
  CHECK_FALSE(is_bipartite(hemicube()));
  const std::vector<Flag> split{0, 40};
  CHECK_THROWS_AS(is_bipartite(split, b), Error);
}

TEST_CASE("induced subgraphs and canonical forms") {
  const auto& b = b_family().b;
  const auto facet = faces(b, 3).front();
  const auto sub = induced_subgraph(b, facet.flags, ColourSet{0, 1, 2});
  CHECK(sub.flag_count() == 24);
  for (Flag u = 0; u < 24; ++u) CHECK(sub.neighbour(u, 3) == u);
  CHECK_THROWS_AS(induced_subgraph(b, facet.flags, ColourSet::all(4)), Error);

  const auto c = canonical(b);
  CHECK(canonical_form(c) == c);
  CHECK(bfs_order(b, 0).size() == 96);
  CHECK(bfs_order(b, 0).front() == 0);
  // canonical forms from different bases coincide for a regular graph
  CHECK(canonical_form(b, 0) == canonical_form(b, 51));

  // one canonical form per flag orbit: 192 flags / 32 automorphisms
  const auto half = *cover_is_maniplex(half_support_voltage(2)).cover;
  std::set<std::vector<std::vector<Flag>>> forms;
  for (Flag u = 0; u < half.flag_count(); ++u) forms.insert(canonical_form(half, u).table());
  CHECK(forms.size() == 6);
}

TEST_CASE("MPX round trip") {
  for (const auto& [name, m] : corpus()) {
    INFO(name);
    const auto text = to_mpx_string(m);
    std::istringstream in(text);
    const auto back = read_mpx(in);
    CHECK(back == m);
    CHECK(graph_from_json_adjacency(to_json_adjacency(m)) == m);
  }
  const auto c = canonical(b_family().b);
  std::istringstream in(to_mpx_string(c));
  CHECK(read_mpx(in) == c);
}

TEST_CASE("MPX parsing") {
  SUBCASE("format") {
    const auto text = to_mpx_string(ColouredGraph(2, {{1, 0, 3, 2}, {3, 2, 1, 0}}));
    CHECK(text == "mpx 1\nrank 2\nflags 4\n1 0 3 2\n3 2 1 0\n");
  }
  SUBCASE("comments and blank lines") {
    std::istringstream in("# square\nmpx 1\n\nrank 2\nflags 4 # four\n1 0 3 2\n3 2 1 0\n");
    CHECK(read_mpx(in).flag_count() == 4);
  }
  SUBCASE("errors carry line numbers") {
    std::istringstream in("mpx 1\nrank 2\nflags 4\n1 0 3 2\n3 2 x 0\n");
    try {
      read_mpx(in);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 5);
    }
  }
  SUBCASE("short file") {
    std::istringstream in("mpx 1\nrank 2\nflags 4\n1 0 3 2\n");
    CHECK_THROWS_AS(read_mpx(in), ParseError);
  }
  SUBCASE("trailing content") {
    std::istringstream in("mpx 1\nrank 2\nflags 4\n1 0 3 2\n3 2 1 0\n1\n");
    CHECK_THROWS_AS(read_mpx(in), ParseError);
  }
  SUBCASE("graph that is not a maniplex") {
    std::istringstream in(to_mpx_string(bad_square6()));
    CHECK(read_mpx_graph(in) == bad_square6());
    std::istringstream again(to_mpx_string(bad_square6()));
    CHECK_THROWS_AS(read_mpx(again), ValidationError);
  }
}
