#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "maniforge/maniplex.hpp"

namespace maniforge {

/// Outcome of a structural check. A false verdict always carries a witness
/// that can be re-checked on its own; a true verdict carries counters.
struct PropertyCertificate {
  std::string property;
  bool verdict{false};
  nlohmann::json witness;  // null when absent
  std::string route;       // which decision procedure produced the verdict, if several exist

  nlohmann::json to_json() const;
  static PropertyCertificate from_json(const std::string& property, const nlohmann::json& j);
};

/// A maximal chain, listed from the least element (rank -1) to the greatest (rank n).
using Chain = std::vector<std::size_t>;

/// Ranked incidence structure with a unique least element of rank -1 and a
/// unique greatest element of rank n. Elements of Pos(M) remember their flag sets.
class FlaggedPoset {
 public:
  struct Element {
    int rank{0};
    std::size_t id{0};        // index among the elements of the same rank
    std::vector<Flag> flags;  // empty for abstract posets
  };

  /// `leq[a][b]` is the order relation. Elements must be grouped by rank in
  /// increasing order; throws maniforge::Error if the bounds are not unique
  /// or the relation is not reflexive.
  FlaggedPoset(std::size_t rank, std::vector<Element> elements, std::vector<std::vector<char>> leq);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return elements_.size(); }
  const Element& element(std::size_t e) const { return elements_[e]; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b] != 0; }

  /// Element indices of rank r in -1..n.
  std::span<const std::size_t> of_rank(int r) const { return by_rank_[static_cast<std::size_t>(r + 1)]; }
  std::size_t bottom() const { return of_rank(-1).front(); }
  std::size_t top() const { return of_rank(static_cast<int>(rank_)).front(); }

  /// Chains with one element per rank, each comparable with all earlier ones.
  /// Enumerated depth-first in element order.
  std::vector<Chain> maximal_chains() const;

 private:
  std::size_t rank_;
  std::vector<Element> elements_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<std::size_t>> by_rank_;
};

/// Pos(M): proper faces of every rank plus the two improper faces, ordered by
/// "F <= G iff F and G share a flag and rank(F) <= rank(G)".
FlaggedPoset build_poset(const Maniplex& m);

PropertyCertificate is_thin(const FlaggedPoset& p);
PropertyCertificate is_thin(const Maniplex& m);

PropertyCertificate is_faithful(const Maniplex& m);

/// Component intersection property. Rank subsets are scanned in increasing
/// bitmask order and face tuples in increasing id order; the witness is the
/// first family whose intersection is empty or disconnected.
PropertyCertificate has_cip(const Maniplex& m);

/// Direct check of strong connectivity on maximal chains. Quadratic in the
/// number of chains; intended for posets with at most a few thousand chains.
/// Throws NotThin.
PropertyCertificate is_strongly_connected(const FlaggedPoset& p);

/// Faithful maniplexes: thin and CIP. Otherwise: thin and strongly connected.
PropertyCertificate is_polytopal(const Maniplex& m);

/// Man(P): flags are maximal chains, i-adjacency swaps the rank-i element.
/// Throws NotThin or NotManiplex.
Maniplex man_from_poset(const FlaggedPoset& p);

}  // namespace maniforge
