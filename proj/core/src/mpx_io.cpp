#include "maniforge/mpx_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace maniforge {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::uint64_t parse_uint(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18) {
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  }
  return std::stoull(tok);
}

std::uint64_t keyword_value(const std::vector<Line>& lines, std::size_t k, const std::string& key,
                            std::size_t eof_line) {
  if (k >= lines.size()) throw ParseError(eof_line, "unexpected end of input, expected '" + key + "'");
  const auto& line = lines[k];
  if (line.tokens.size() != 2 || line.tokens[0] != key) {
    throw ParseError(line.number, "expected '" + key + " <value>'");
  }
  return parse_uint(line.tokens[1], line.number);
}

}  // namespace

ColouredGraph read_mpx_graph(std::istream& in) {
  const auto lines = tokenize(in);
  const std::size_t eof_line = lines.empty() ? 1 : lines.back().number + 1;
  if (keyword_value(lines, 0, "mpx", eof_line) != 1) throw ParseError(lines[0].number, "unsupported mpx version");
  const auto rank = keyword_value(lines, 1, "rank", eof_line);
  const auto flags = keyword_value(lines, 2, "flags", eof_line);
  if (rank == 0 || rank > kMaxRank) throw ParseError(lines[1].number, "rank must be in 1.." + std::to_string(kMaxRank));
  if (flags == 0) throw ParseError(lines[2].number, "flag count must be positive");

  std::vector<std::vector<Flag>> adj(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    const std::size_t k = 3 + i;
    if (k >= lines.size()) throw ParseError(eof_line, "missing row for colour " + std::to_string(i));
    const auto& line = lines[k];
    if (line.tokens.size() != flags) {
      throw ParseError(line.number, "colour " + std::to_string(i) + " row has " +
                                        std::to_string(line.tokens.size()) + " entries, expected " +
                                        std::to_string(flags));
    }
    adj[i].reserve(flags);
    for (const auto& tok : line.tokens) {
      const auto v = parse_uint(tok, line.number);
      if (v >= flags) throw ParseError(line.number, "flag index " + tok + " out of range");
      adj[i].push_back(static_cast<Flag>(v));
    }
  }
  if (lines.size() > 3 + rank) throw ParseError(lines[3 + rank].number, "trailing content after last row");
  return ColouredGraph(rank, std::move(adj));
}

Maniplex read_mpx(std::istream& in) { return validate(read_mpx_graph(in)); }

void write_mpx(std::ostream& out, const ColouredGraph& g) {
  out << "mpx 1\n" << "rank " << g.rank() << '\n' << "flags " << g.flag_count() << '\n';
  for (Colour i = 0; i < g.rank(); ++i) {
    const auto row = g.permutation(i);
    for (std::size_t u = 0; u < row.size(); ++u) {
      if (u != 0) out << ' ';
      out << row[u];
    }
    out << '\n';
  }
}

std::string to_mpx_string(const ColouredGraph& g) {
  std::ostringstream os;
  write_mpx(os, g);
  return os.str();
}

nlohmann::json to_json_adjacency(const ColouredGraph& g) {
  return nlohmann::json{{"rank", g.rank()}, {"flags", g.flag_count()}, {"adj", g.table()}};
}

ColouredGraph graph_from_json_adjacency(const nlohmann::json& j) {
  try {
    const auto rank = j.at("rank").get<std::size_t>();
    const auto flags = j.at("flags").get<std::size_t>();
    auto adj = j.at("adj").get<std::vector<std::vector<Flag>>>();
    for (const auto& row : adj) {
      if (row.size() != flags) throw Error("adjacency row length does not match 'flags'");
    }
    return ColouredGraph(rank, std::move(adj));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad JSON adjacency: ") + e.what());
  }
}

}  // namespace maniforge
