#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "maniforge/constructions.hpp"
#include "maniforge/maniplex.hpp"
#include "maniforge/voltage.hpp"

namespace maniforge::testing {

/// The one-vertex torus map {4,4}_(1,0), written out by hand.
Maniplex torus8();

/// Six flags, colours 0 and 2 do not form 4-cycles.
ColouredGraph bad_square6();

Maniplex polygon(std::size_t m);
Maniplex cube();
Maniplex hemicube();
Maniplex tetrahedron();
Maniplex torus44(std::size_t s);

/// Flag graph of the cube from coordinates: flags are (vertex, edge, square)
/// triples of the unit cube, colour i replaces the rank-i element.
Maniplex geometric_cube();

/// Antipodal quotient of geometric_cube().
Maniplex geometric_hemicube();

/// Colour-2 darts of X lying in e1 only, over Z_n; a non-regular cover of B.
VoltageAssignment half_support_voltage(std::uint32_t n);

/// Face of `g` as a standalone rank-(n-1) graph when i = n-1, or with
/// colour i shifted out in general: the colours other than i, renumbered.
ColouredGraph face_graph(const ColouredGraph& g, const Face& f);

/// Union-find face count per rank, independent of the library.
std::vector<std::size_t> brute_face_vector(const ColouredGraph& g);

struct NamedManiplex {
  std::string name;
  Maniplex m;
};

/// Small corpus used by property suites: polygons, cube, hemicube,
/// tetrahedron, tori, B, Bbar, B^2, B^3, Bbar^2, the half-support cover
/// and the 8-flag torus.
const std::vector<NamedManiplex>& corpus();

/// Seeded generator; the seed comes from MANIFORGE_SEED when set.
class Gen {
 public:
  Gen();
  explicit Gen(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::uint32_t between(std::uint32_t lo, std::uint32_t hi) {
    return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng_);
  }
  bool coin() { return below(2) == 1; }

  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

  /// Random colour word of the given length.
  std::vector<Colour> word(std::size_t rank, std::size_t length);

  /// Arbitrary assignment: every link gets a uniform value in Z_m.
  VoltageAssignment voltage(const Maniplex& base, std::uint32_t m);

  /// Zero on the breadth-first spanning tree, uniform elsewhere; nonzero
  /// values land on roughly `density` of the cotree links.
  VoltageAssignment reduced_voltage(const Maniplex& base, std::uint32_t m, double density);

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

}  // namespace maniforge::testing
