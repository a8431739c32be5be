#include "maniforge/cli/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "maniforge/error.hpp"
#include "maniforge/symmetry.hpp"

namespace maniforge::cli {

using nlohmann::json;

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"thin",      "faithful", "cip",      "strongly_connected",
                                              "polytopal", "regular",  "self_dual"};
  return names;
}

bool is_check_name(std::string_view name) {
  const auto& n = check_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

double estimate_ms(std::string_view check, std::size_t flags, std::size_t rank) {
  const double f = static_cast<double>(flags);
  const double n = static_cast<double>(rank);
  const double subsets = std::ldexp(1.0, static_cast<int>(rank));
  if (check == "thin") return f * n * n * 5e-5;
  if (check == "faithful") return f * n * 1e-4;
  if (check == "cip") return f * subsets * n * 5e-5;
  if (check == "strongly_connected") return (f * f * n + f * subsets * n) * 1e-6;
  if (check == "polytopal") return estimate_ms("cip", flags, rank) + estimate_ms("thin", flags, rank);
  if (check == "regular" || check == "self_dual") return f * f * n * 1e-5;
  throw Error("unknown check '" + std::string(check) + "'");
}

PropertyCertificate run_check(std::string_view check, const Maniplex& m) {
  if (check == "thin") return is_thin(m);
  if (check == "faithful") return is_faithful(m);
  if (check == "cip") return has_cip(m);
  if (check == "strongly_connected") return is_strongly_connected(build_poset(m));
  if (check == "polytopal") return is_polytopal(m);
  if (check == "regular") {
    PropertyCertificate c{"regular", false, nullptr, ""};
    const auto order = aut_order(m);
    c.verdict = order == m.flag_count();
    c.witness = json{{"aut_order", order}};
    if (!c.verdict) {
      for (Flag v = 0; v < m.flag_count(); ++v) {
        Flag conflict = 0;
        if (!try_extend(m, 0, v, &conflict)) {
          c.witness["target"] = v;
          c.witness["conflict"] = conflict;
          break;
        }
      }
    }
    return c;
  }
  if (check == "self_dual") {
    PropertyCertificate c{"self_dual", is_self_dual(m), nullptr, ""};
    if (!c.verdict) c.witness = json{{"faces", face_vector(m)}, {"dual_faces", face_vector(dual(m))}};
    return c;
  }
  throw Error("unknown check '" + std::string(check) + "'");
}

json Report::to_json() const {
  json j{{"name", name}, {"rank", rank}, {"flags", flags}, {"faces", faces}};
  json c = json::object();
  for (const auto& [k, cert] : certs) c[k] = cert.to_json();
  j["certs"] = c;
  if (!skipped.empty()) j["skipped"] = skipped;
  if (fibre_profile) {
    json p = json::array();
    for (const auto& x : *fibre_profile) p.push_back(x ? json(*x) : json(nullptr));
    j["fibre_profile"] = p;
  }
  j["ms"] = ms;
  return j;
}

Report Report::from_json(const json& j) {
  Report r;
  r.name = j.at("name").get<std::string>();
  r.rank = j.at("rank").get<std::size_t>();
  r.flags = j.at("flags").get<std::size_t>();
  r.faces = j.at("faces").get<std::vector<std::size_t>>();
  for (const auto& [k, v] : j.at("certs").items()) r.certs.emplace(k, PropertyCertificate::from_json(k, v));
  if (j.contains("skipped")) r.skipped = j.at("skipped").get<std::map<std::string, std::string>>();
  if (j.contains("fibre_profile")) {
    std::vector<std::optional<std::size_t>> p;
    for (const auto& x : j.at("fibre_profile")) {
      p.push_back(x.is_null() ? std::nullopt : std::optional<std::size_t>(x.get<std::size_t>()));
    }
    r.fibre_profile = std::move(p);
  }
  r.ms = j.value("ms", 0.0);
  return r;
}

Report make_report(const std::string& name, const Maniplex& m, const std::vector<std::string>& checks,
                   std::optional<double> budget_ms) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.name = name;
  r.rank = m.rank();
  r.flags = m.flag_count();
  r.faces = face_vector(m);
  double left = budget_ms.value_or(0);
  for (const auto& check : check_names()) {
    if (std::find(checks.begin(), checks.end(), check) == checks.end()) continue;
    if (budget_ms) {
      const double cost = estimate_ms(check, m.flag_count(), m.rank());
      if (cost > left) {
        r.skipped[check] = "estimated " + std::to_string(static_cast<long long>(std::ceil(cost))) + " ms exceeds budget";
        continue;
      }
      left -= cost;
    }
    try {
      r.certs[check] = run_check(check, m);
    } catch (const NotThin&) {
      r.skipped[check] = "requires a thin poset";
    }
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::map<std::string, bool> verdicts(const Report& r) {
  std::map<std::string, bool> out;
  for (const auto& [k, c] : r.certs) out[k] = c.verdict;
  return out;
}

}  // namespace maniforge::cli
