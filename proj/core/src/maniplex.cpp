#include "maniforge/maniplex.hpp"

#include <string>

namespace maniforge {

namespace {

std::string at(Flag u, Colour i) { return "flag " + std::to_string(u) + ", colour " + std::to_string(i); }

}  // namespace

std::optional<ValidationError> find_violation(const ColouredGraph& g) {
  using K = ValidationErrorKind;
  const auto n = g.rank();
  const auto f = g.flag_count();
  if (n == 0 || f == 0) return ValidationError(K::Malformed, 0, 0, 0, "rank and flag count must be positive");

  for (Colour i = 0; i < n; ++i) {
    for (Flag u = 0; u < f; ++u) {
      if (g.neighbour(g.neighbour(u, i), i) != u) return ValidationError(K::NotInvolution, u, i, i, at(u, i));
    }
  }
  for (Colour i = 0; i < n; ++i) {
    for (Flag u = 0; u < f; ++u) {
      if (g.neighbour(u, i) == u) return ValidationError(K::FixedPoint, u, i, i, at(u, i));
    }
  }
  for (Colour i = 0; i < n; ++i) {
    for (Colour j = i + 1; j < n; ++j) {
      for (Flag u = 0; u < f; ++u) {
        if (g.neighbour(u, i) == g.neighbour(u, j)) {
          return ValidationError(K::NotSimple, u, i, j,
                                 "flag " + std::to_string(u) + " has the same neighbour under colours " +
                                     std::to_string(i) + " and " + std::to_string(j));
        }
      }
    }
  }
  // Simplicity already rules out u^{ij} = u, so a closed ijij-walk is a 4-cycle.
  for (Colour i = 0; i < n; ++i) {
    for (Colour j = i + 2; j < n; ++j) {
      for (Flag u = 0; u < f; ++u) {
        const Flag w = g.neighbour(g.neighbour(g.neighbour(g.neighbour(u, i), j), i), j);
        if (w != u) {
          return ValidationError(K::BadSquare, u, i, j,
                                 "the {" + std::to_string(i) + "," + std::to_string(j) +
                                     "}-component of flag " + std::to_string(u) + " is not a 4-cycle");
        }
      }
    }
  }
  const auto reached = colour_component(g, 0, ColourSet::all(n));
  if (reached.size() != f) {
    Flag missing = 0;
    for (Flag u = 0; u < f; ++u) {
      if (u >= reached.size() || reached[u] != u) {
        missing = u;
        break;
      }
    }
    return ValidationError(K::Disconnected, missing, 0, 0,
                           "flag " + std::to_string(missing) + " is not reachable from flag 0");
  }
  return std::nullopt;
}

Maniplex validate(ColouredGraph g) {
  if (auto violation = find_violation(g)) throw *violation;
  return Maniplex(std::move(g));
}

Maniplex validate(std::vector<std::vector<Flag>> adj, std::size_t rank) {
  return validate(ColouredGraph(rank, std::move(adj)));
}

FaceLabels face_labels(const ColouredGraph& g) {
  FaceLabels out;
  for (Colour i = 0; i < g.rank(); ++i) {
    auto comp = components(g, ColourSet::all_but(g.rank(), i));
    out.labels.push_back(std::move(comp.label));
    out.counts.push_back(comp.count);
  }
  return out;
}

std::vector<Face> faces(const ColouredGraph& g, Colour i) {
  if (i >= g.rank()) throw ColourOutOfRange(i, g.rank());
  const auto comp = components(g, ColourSet::all_but(g.rank(), i));
  std::vector<Face> out(comp.count);
  for (std::size_t k = 0; k < comp.count; ++k) {
    out[k].rank = i;
    out[k].id = k;
  }
  for (Flag u = 0; u < g.flag_count(); ++u) out[comp.label[u]].flags.push_back(u);
  return out;
}

std::vector<std::size_t> face_vector(const ColouredGraph& g) {
  std::vector<std::size_t> out;
  for (Colour i = 0; i < g.rank(); ++i) out.push_back(components(g, ColourSet::all_but(g.rank(), i)).count);
  return out;
}

Maniplex dual(const Maniplex& m) {
  const auto n = m.rank();
  std::vector<std::vector<Flag>> adj(n);
  for (Colour i = 0; i < n; ++i) adj[i] = m.table()[n - 1 - i];
  return validate(ColouredGraph(n, std::move(adj)));
}

Flag trace(const ColouredGraph& g, const Walk& w) {
  Flag u = w.start;
  for (Colour c : w.colours) {
    if (c >= g.rank()) throw ColourOutOfRange(c, g.rank());
    u = g.neighbour(u, c);
  }
  return u;
}

std::vector<Flag> trace_path(const ColouredGraph& g, const Walk& w) {
  std::vector<Flag> out{w.start};
  for (Colour c : w.colours) {
    if (c >= g.rank()) throw ColourOutOfRange(c, g.rank());
    out.push_back(g.neighbour(out.back(), c));
  }
  return out;
}

Maniplex canonical(const Maniplex& m) { return validate(canonical_form(m, 0)); }

}  // namespace maniforge
