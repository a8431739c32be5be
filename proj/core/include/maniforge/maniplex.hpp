#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "maniforge/coloured_graph.hpp"
#include "maniforge/error.hpp"
#include "maniforge/types.hpp"

namespace maniforge {

/// A validated maniplex: a connected coloured graph whose colours are
/// fixed-point-free involutions, pairwise distinct at every flag, and whose
/// non-consecutive colour pairs close up in 4-cycles.
///
/// Instances only come out of validate(), so every Maniplex value satisfies
/// the axioms. The commuting condition is vacuous for rank <= 2.
class Maniplex : public ColouredGraph {
 public:
  Maniplex() = default;

 private:
  explicit Maniplex(ColouredGraph g) : ColouredGraph(std::move(g)) {}
  friend Maniplex validate(ColouredGraph g);
};

/// First violated axiom in the fixed scan order involution, fixed point,
/// simplicity, squares, connectivity.
std::optional<ValidationError> find_violation(const ColouredGraph& g);

/// Throws ValidationError on the first violation.
Maniplex validate(ColouredGraph g);
Maniplex validate(std::vector<std::vector<Flag>> adj, std::size_t rank);

struct Face {
  Colour rank{0};
  std::size_t id{0};
  std::vector<Flag> flags;  // sorted
};

/// Faces of rank i, ids in increasing order of least flag.
std::vector<Face> faces(const ColouredGraph& g, Colour i);

/// Face membership for every rank at once: labels[i][u] is the id of the
/// i-face containing u.
struct FaceLabels {
  std::vector<std::vector<std::uint32_t>> labels;
  std::vector<std::size_t> counts;
};

FaceLabels face_labels(const ColouredGraph& g);

/// Number of faces of each rank 0..n-1.
std::vector<std::size_t> face_vector(const ColouredGraph& g);

/// Reverse colouring: colour i becomes n-1-i.
Maniplex dual(const Maniplex& m);

Flag trace(const ColouredGraph& g, const Walk& w);

/// Every flag visited, start included.
std::vector<Flag> trace_path(const ColouredGraph& g, const Walk& w);

/// Canonical form (breadth-first relabelling from flag 0).
Maniplex canonical(const Maniplex& m);

}  // namespace maniforge
