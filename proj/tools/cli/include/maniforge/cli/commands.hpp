#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "maniforge/cli/report.hpp"

namespace maniforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrediction = 1;
inline constexpr int kExitInput = 2;

struct BuildOptions {
  std::string target;  // b, bbar, bn, bnbar, raviolo
  std::optional<std::uint32_t> n;
  std::optional<std::uint32_t> k;
  std::filesystem::path out;  // empty: stdout
};

struct CheckOptions {
  std::filesystem::path in;
  std::vector<std::string> checks;
  bool all{false};
  double budget_ms{60'000};
};

struct CensusOptions {
  std::uint32_t n_max{1};
  std::filesystem::path out_dir{"census"};
};

struct ConvertOptions {
  std::filesystem::path in;
  std::filesystem::path out;  // empty: stdout
  bool json{false};           // force JSON output
};

/// The object a build target names, in canonical form.
Maniplex build_target(const BuildOptions& opts);

/// Reads MPX or JSON adjacency, chosen by the first non-blank character.
ColouredGraph load_graph(const std::filesystem::path& path);

/// Writes through a temporary file in the same directory, then renames.
void write_atomically(const std::filesystem::path& path, const std::string& content);

int cmd_build(const BuildOptions& opts, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);
int cmd_census(const CensusOptions& opts, std::ostream& out, std::ostream& err);
int cmd_convert(const ConvertOptions& opts, std::ostream& out, std::ostream& err);

/// One census object: its report and the predictions that failed.
struct CensusEntry {
  Report report;
  std::vector<std::string> failures;
  nlohmann::json counterexample;  // certificate behind the first failure
};

CensusEntry census_Bn(std::uint32_t n);
CensusEntry census_Bn_bar(std::uint32_t n);

}  // namespace maniforge::cli
