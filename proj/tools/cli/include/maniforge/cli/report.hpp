#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "maniforge/maniplex.hpp"
#include "maniforge/poset.hpp"

namespace maniforge::cli {

/// Names of the checks a report can carry, in report order.
const std::vector<std::string>& check_names();

bool is_check_name(std::string_view name);

/// Rough running time of a check on a maniplex with `flags` flags and the
/// given rank, in milliseconds.
double estimate_ms(std::string_view check, std::size_t flags, std::size_t rank);

/// Runs one named check. `regular` and `self_dual` are wrapped as
/// certificates with their own witnesses.
PropertyCertificate run_check(std::string_view check, const Maniplex& m);

struct Report {
  std::string name;
  std::size_t rank{0};
  std::size_t flags{0};
  std::vector<std::size_t> faces;
  std::map<std::string, PropertyCertificate> certs;
  std::map<std::string, std::string> skipped;  // check -> reason
  std::optional<std::vector<std::optional<std::size_t>>> fibre_profile;
  double ms{0};

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
};

/// Runs `checks` in report order. With a budget, a check is skipped when its
/// estimate exceeds what is left of the budget.
Report make_report(const std::string& name, const Maniplex& m, const std::vector<std::string>& checks,
                   std::optional<double> budget_ms = std::nullopt);

/// Verdicts by check name, for comparing reports.
std::map<std::string, bool> verdicts(const Report& r);

}  // namespace maniforge::cli
