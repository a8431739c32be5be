#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "maniforge/coloured_graph.hpp"
#include "maniforge/maniplex.hpp"

namespace maniforge {

// MPX text format:
//
//   mpx 1
//   rank <n>
//   flags <F>
//   <F images of flags 0..F-1 under colour 0>
//   ...
//   <F images under colour n-1>
//
// '#' starts a comment running to the end of the line. Blank lines are
// ignored on input; the writer emits exactly the lines above.

/// Parses the table without checking the maniplex axioms. Throws ParseError.
ColouredGraph read_mpx_graph(std::istream& in);

/// Parses and validates. Throws ParseError or ValidationError.
Maniplex read_mpx(std::istream& in);

void write_mpx(std::ostream& out, const ColouredGraph& g);
std::string to_mpx_string(const ColouredGraph& g);

/// {"rank": n, "flags": F, "adj": [[...], ...]}
nlohmann::json to_json_adjacency(const ColouredGraph& g);
ColouredGraph graph_from_json_adjacency(const nlohmann::json& j);

}  // namespace maniforge
