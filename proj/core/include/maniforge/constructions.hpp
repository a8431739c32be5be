#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maniforge/maniplex.hpp"
#include "maniforge/presentation.hpp"
#include "maniforge/symmetry.hpp"
#include "maniforge/voltage.hpp"

namespace maniforge {

/// <r0..r3 | (r0r1)^4, (r1r2)^3, (r2r3)^4, commuting pairs, (r0r1r2)^3, (r1r2r3)^3>,
/// the automorphism group of {{4,3}_3,{3,4}_3}.
GroupPresentation b_presentation();

/// Checks B must pass; returns the names of the failed ones.
std::vector<std::string> verify_B(const Maniplex& b);

/// The 96-flag regular 4-polytope {{4,3}_3,{3,4}_3}: four hemicubes, any two
/// sharing one square. Throws ConstructionMismatch if any check in verify_B fails.
Maniplex build_B();

/// A set of colour-2 darts inside two vertex-disjoint edges of B.
struct VoltageSupport {
  std::vector<Dart> darts;  // sorted; dart (u, 2) runs from u to u^2
  std::vector<Flag> flags;  // initial flags of the darts, sorted

  bool contains(Flag u) const;
  friend bool operator==(const VoltageSupport&, const VoltageSupport&) = default;
  friend auto operator<=>(const VoltageSupport& a, const VoltageSupport& b) { return a.darts <=> b.darts; }
};

class BadEdges : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

/// Edge with the least id, then the least-id edge sharing no vertex with it.
std::pair<Face, Face> default_edges(const Maniplex& b);

/// Every support X whose flag set is closed under colours 0 and 3 and the
/// word 101, has exactly one end of every 2-link of e1 and e2, and puts four
/// darts in every facet and every vertex. Throws BadEdges or NoSolution.
std::vector<VoltageSupport> find_voltage_support(const Maniplex& b, const Face& e1, const Face& e2);

/// Violated support conditions (empty when X is valid).
std::vector<std::string> check_support(const Maniplex& b, const VoltageSupport& x);

/// zeta_n: 1 on darts of X, -1 on their reverses, 0 elsewhere, over Z_n.
VoltageAssignment zeta_n(const Maniplex& b, const VoltageSupport& x, std::uint32_t n);

/// B, its default edge pair and the lexicographically least support, computed once.
struct BFamily {
  Maniplex b;
  Face e1;
  Face e2;
  VoltageSupport support;
};
const BFamily& b_family();

/// Cov(B, zeta_n) with 96n flags. Throws ConstructionMismatch if the cover
/// is not a maniplex.
Maniplex build_Bn(std::uint32_t n);

/// Canonical double cover of B^n, 192n flags.
Maniplex build_Bn_bar(std::uint32_t n);

/// The automorphism of B sending the least flag u of X to u^i.
FlagMap support_rho(const Maniplex& b, const VoltageSupport& x, Colour i);

/// Automorphism of B^n sending (u, 0) to its 1-neighbour:
/// (v, g) -> (rho1(v), -g) when v lies in F_X or its rho1-image, else (rho1(v), 1 - g).
/// Throws NotAutomorphism if the permutation fails to commute with a colour.
FlagMap rho1_hat(const Maniplex& cover, const VoltageSupport& x, const FlagMap& rho1);

/// R(M): flags (u, j) with j in Z_2 at index 2u + j; colour i < n acts on u,
/// colour n flips j.
Maniplex raviolo(const Maniplex& m);

/// Sizes of the {1,2}-coloured components, i.e. the polygons where a facet meets a vertex.
std::vector<std::size_t> facet_vertex_cycle_lengths(const ColouredGraph& g);

/// First flag among `candidates` from which `colours` traces a closed walk
/// visiting colours.size() distinct flags.
std::optional<Flag> find_simple_closed_walk(const ColouredGraph& g, const std::vector<Flag>& candidates,
                                            const std::vector<Colour>& colours);

/// The colour word 012101021.
const std::vector<Colour>& petrie_nine_word();

}  // namespace maniforge
