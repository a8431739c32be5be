#include "maniforge/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "maniforge/constructions.hpp"
#include "maniforge/error.hpp"
#include "maniforge/mpx_io.hpp"
#include "maniforge/symmetry.hpp"
#include "maniforge/voltage.hpp"

namespace maniforge::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const fs::path& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_atomically(path, content);
  }
}

std::string profile_text(const std::optional<std::vector<std::optional<std::size_t>>>& p) {
  if (!p) return "-";
  std::string s = "(";
  for (std::size_t i = 0; i < p->size(); ++i) {
    if (i) s += ",";
    s += (*p)[i] ? std::to_string(*(*p)[i]) : "?";
  }
  return s + ")";
}

std::string faces_text(const std::vector<std::size_t>& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + ")";
}

// Records a prediction; the first failure keeps its evidence.
class Predictions {
 public:
  explicit Predictions(CensusEntry& e) : entry_(e) {}

  void expect(const std::string& what, bool ok, const json& evidence) {
    if (ok) return;
    if (entry_.failures.empty()) entry_.counterexample = evidence;
    entry_.failures.push_back(what);
  }

  void verdict(const std::string& check, bool expected) {
    const auto it = entry_.report.certs.find(check);
    if (it == entry_.report.certs.end()) {
      expect(check + " was not evaluated", false, json{{"skipped", entry_.report.skipped}});
      return;
    }
    expect(check + (expected ? " holds" : " fails"), it->second.verdict == expected, it->second.to_json());
  }

 private:
  CensusEntry& entry_;
};

void check_facets(const Maniplex& m, std::size_t cycle, Predictions& p) {
  for (const auto& f : faces(m, 3)) {
    const auto lengths = facet_vertex_cycle_lengths(induced_subgraph(m, f.flags, ColourSet{0, 1, 2}));
    const bool ok = std::all_of(lengths.begin(), lengths.end(), [&](std::size_t c) { return c == cycle; });
    p.expect("facet {1,2}-cycles have length " + std::to_string(cycle), ok, json{{"facet", f.id}, {"lengths", lengths}});
    p.expect("facet contains a closed 012101021 walk", find_simple_closed_walk(m, f.flags, petrie_nine_word()).has_value(),
             json{{"facet", f.id}});
  }
  for (Colour r : {0u, 3u}) {
    for (const auto& f : faces(m, r)) {
      p.expect(std::to_string(r) + "-faces are not bipartite", !is_bipartite(f.flags, m), json{{"rank", r}, {"face", f.id}});
    }
  }
}

}  // namespace

void write_atomically(const fs::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw Error("write to '" + tmp.string() + "' failed");
  }
  fs::rename(tmp, path);
}

ColouredGraph load_graph(const fs::path& path) {
  const auto text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return graph_from_json_adjacency(json::parse(text));
    } catch (const json::parse_error& e) {
      const auto upto = std::min<std::size_t>(e.byte, text.size());
      const auto line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n'));
      throw ParseError(line, "invalid JSON");
    } catch (const json::exception& e) {
      throw ParseError(1, std::string("bad JSON adjacency: ") + e.what());
    }
  }
  std::istringstream in(text);
  return read_mpx_graph(in);
}

Maniplex build_target(const BuildOptions& opts) {
  const auto need_n = [&]() -> std::uint32_t {
    if (!opts.n || *opts.n == 0) throw std::invalid_argument("target '" + opts.target + "' needs --n >= 1");
    return *opts.n;
  };
  if (opts.target == "b") return canonical(build_B());
  if (opts.target == "bbar") return canonical(validate(canonical_double_cover(build_B())));
  if (opts.target == "bn") return canonical(build_Bn(need_n()));
  if (opts.target == "bnbar") return canonical(build_Bn_bar(need_n()));
  if (opts.target == "raviolo") {
    const auto n = need_n();
    const auto k = opts.k.value_or(1);
    if (k == 0) throw std::invalid_argument("raviolo needs --k >= 1");
    Maniplex m = build_Bn_bar(n);
    for (std::uint32_t i = 0; i < k; ++i) m = raviolo(m);
    return canonical(m);
  }
  throw std::invalid_argument("unknown target '" + opts.target + "'");
}

int cmd_build(const BuildOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const auto m = build_target(opts);
    emit(opts.out, to_mpx_string(m), out);
    err << opts.target << ": rank " << m.rank() << ", " << m.flag_count() << " flags";
    if (!opts.out.empty()) err << " -> " << opts.out.string();
    err << "\n";
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ConstructionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrediction;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrediction;
  }
}

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  std::optional<Maniplex> m;
  try {
    m = validate(load_graph(opts.in));
  } catch (const ParseError& e) {
    err << opts.in.string() << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    err << opts.in.string() << ": not a maniplex: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  const bool everything = opts.all || opts.checks.empty();
  const auto checks = everything ? check_names() : opts.checks;
  const auto report =
      make_report(opts.in.stem().string(), *m, checks, everything ? std::optional<double>(opts.budget_ms) : std::nullopt);
  out << report.to_json().dump(2) << "\n";
  return kExitOk;
}

CensusEntry census_Bn(std::uint32_t n) {
  CensusEntry e;
  Predictions p(e);
  const auto& fam = b_family();
  const auto zeta = zeta_n(fam.b, fam.support, n);
  const auto cover = cover_is_maniplex(zeta);
  e.report.name = "B^" + std::to_string(n);
  p.expect("cover is a maniplex", cover.certificate.verdict, cover.certificate.to_json());
  if (!cover.cover) return e;
  const auto& m = *cover.cover;
  e.report = make_report(e.report.name, m, check_names());
  e.report.fibre_profile = fibre_profile(zeta);

  p.expect("flag count " + std::to_string(96 * n), m.flag_count() == 96 * n, json{{"flags", m.flag_count()}});
  p.expect("face vector", e.report.faces == std::vector<std::size_t>{4, 6 * n, 6 * n, 4}, json{{"faces", e.report.faces}});
  for (const auto* c : {"thin", "faithful", "cip", "strongly_connected", "polytopal", "regular"}) p.verdict(c, true);
  const std::vector<std::optional<std::size_t>> profile{1, n, n, 1};
  p.expect("fibre profile (1,n,n,1)", e.report.fibre_profile == profile, json{{"fibre_profile", profile_text(e.report.fibre_profile)}});
  check_facets(m, 6 * n, p);
  if (n == 1) p.expect("isomorphic to B", are_isomorphic(m, fam.b), json{{"n", n}});
  return e;
}

CensusEntry census_Bn_bar(std::uint32_t n) {
  CensusEntry e;
  Predictions p(e);
  e.report.name = "Bbar^" + std::to_string(n);
  const auto bn = build_Bn(n);
  const auto zeta = canonical_voltage(bn);
  const auto cover = cover_is_maniplex(zeta);
  p.expect("cover is a maniplex", cover.certificate.verdict, cover.certificate.to_json());
  if (!cover.cover) return e;
  const auto& m = *cover.cover;
  e.report = make_report(e.report.name, m, check_names());
  e.report.fibre_profile = fibre_profile(zeta);

  p.expect("flag count " + std::to_string(192 * n), m.flag_count() == 192 * n, json{{"flags", m.flag_count()}});
  p.expect("face vector", e.report.faces == std::vector<std::size_t>{4, 12 * n, 12 * n, 4}, json{{"faces", e.report.faces}});
  for (const auto* c : {"thin", "faithful", "regular"}) p.verdict(c, true);
  for (const auto* c : {"cip", "strongly_connected", "polytopal"}) p.verdict(c, false);
  const std::vector<std::optional<std::size_t>> profile{1, 2, 2, 1};
  p.expect("fibre profile (1,2,2,1)", e.report.fibre_profile == profile, json{{"fibre_profile", profile_text(e.report.fibre_profile)}});
  if (n == 1) p.expect("isomorphic to the double cover of B", are_isomorphic(m, canonical_double_cover(b_family().b)), json{{"n", n}});
  return e;
}

int cmd_census(const CensusOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.n_max == 0) {
    err << "error: --n-max must be at least 1\n";
    return kExitInput;
  }
  try {
    fs::create_directories(opts.out_dir);
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  b_family();

  std::vector<std::future<CensusEntry>> jobs;
  for (std::uint32_t n = 1; n <= opts.n_max; ++n) {
    jobs.push_back(std::async(std::launch::async, census_Bn, n));
    jobs.push_back(std::async(std::launch::async, census_Bn_bar, n));
  }
  std::vector<CensusEntry> entries;
  try {
    for (auto& j : jobs) entries.push_back(j.get());
  } catch (const Error& e) {
    err << "error: construction failed: " << e.what() << "\n";
    return kExitPrediction;
  }

  std::ostringstream tsv;
  tsv << "name\tflags\tfaces\tthin\tfaithful\tcip\tstrongly_connected\tpolytopal\tregular\tself_dual\tfibre_profile\tms\tpredictions\n";
  json summary = json::array();
  auto mark = [](const Report& r, const std::string& c) -> std::string {
    const auto it = r.certs.find(c);
    return it == r.certs.end() ? "-" : (it->second.verdict ? "true" : "false");
  };
  for (const auto& e : entries) {
    const auto& r = e.report;
    std::string file = r.name;
    std::replace(file.begin(), file.end(), '^', '_');
    try {
      write_atomically(opts.out_dir / (file + ".json"), r.to_json().dump(2) + "\n");
    } catch (const std::exception& x) {
      err << "error: " << x.what() << "\n";
      return kExitInput;
    }
    tsv << r.name << '\t' << r.flags << '\t' << faces_text(r.faces);
    for (const auto& c : check_names()) tsv << '\t' << mark(r, c);
    tsv << '\t' << profile_text(r.fibre_profile) << '\t' << static_cast<long long>(r.ms) << '\t'
        << (e.failures.empty() ? "ok" : "FAILED") << '\n';
    json row{{"name", r.name}, {"flags", r.flags}, {"faces", r.faces}, {"file", file + ".json"}};
    for (const auto& [k, v] : verdicts(r)) row["verdicts"][k] = v;
    row["failures"] = e.failures;
    summary.push_back(row);
  }
  try {
    write_atomically(opts.out_dir / "summary.tsv", tsv.str());
    write_atomically(opts.out_dir / "summary.json", summary.dump(2) + "\n");
  } catch (const std::exception& x) {
    err << "error: " << x.what() << "\n";
    return kExitInput;
  }
  out << tsv.str();

  for (const auto& e : entries) {
    if (e.failures.empty()) continue;
    err << "prediction failed for " << e.report.name << ": " << e.failures.front() << "\n"
        << e.counterexample.dump(2) << "\n";
    return kExitPrediction;
  }
  return kExitOk;
}

int cmd_convert(const ConvertOptions& opts, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = read_file(opts.in);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool from_json = first != std::string::npos && text[first] == '{';
  try {
    const auto m = validate(load_graph(opts.in));
    const bool to_json = opts.json || !from_json;
    emit(opts.out, to_json ? to_json_adjacency(m).dump() + "\n" : to_mpx_string(m), out);
    return kExitOk;
  } catch (const ParseError& e) {
    err << opts.in.string() << ": " << e.what() << "\n";
  } catch (const ValidationError& e) {
    err << opts.in.string() << ": not a maniplex: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInput;
}

}  // namespace maniforge::cli
