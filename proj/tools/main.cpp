#include <algorithm>
#include <iostream>

#include <CLI11.hpp>

#include "maniforge/cli/commands.hpp"

using namespace maniforge::cli;

int main(int argc, char** argv) {
  CLI::App app{"Build and certify maniplexes, their covers and incidence posets"};
  app.require_subcommand(1);

  BuildOptions build;
  auto* b = app.add_subcommand("build", "Construct an object and write it as canonical MPX");
  b->add_option("target", build.target, "b, bbar, bn, bnbar or raviolo")
      ->required()
      ->check(CLI::IsMember({"b", "bbar", "bn", "bnbar", "raviolo"}));
  b->add_option("--n", build.n, "Cover index for bn, bnbar and raviolo");
  b->add_option("--k", build.k, "Raviolo iterations");
  b->add_option("--out", build.out, "Output file (default stdout)");

  CheckOptions check;
  std::vector<std::string> flags;
  auto* c = app.add_subcommand("check", "Run property checks and print a JSON report");
  c->add_option("file", check.in, "MPX or JSON adjacency file")->required();
  c->add_flag("--all", check.all, "Every check whose estimate fits the budget (default when no check is named)");
  c->add_option("--budget-ms", check.budget_ms, "Time budget for --all in milliseconds")->capture_default_str();
  for (const auto& name : check_names()) {
    std::string flag = "--" + name;
    std::replace(flag.begin(), flag.end(), '_', '-');
    c->add_flag_callback(flag, [&flags, name] { flags.push_back(name); }, "Run the " + name + " check");
  }

  CensusOptions census;
  auto* s = app.add_subcommand("census", "Build B^n and its double cover for n = 1..n-max and check every prediction");
  s->add_option("--n-max", census.n_max, "Largest n")->required()->check(CLI::PositiveNumber);
  s->add_option("--out", census.out_dir, "Directory for reports")->capture_default_str();

  ConvertOptions convert;
  auto* v = app.add_subcommand("convert", "Convert between MPX and JSON adjacency");
  v->add_option("file", convert.in, "Input file")->required();
  v->add_option("--out", convert.out, "Output file (default stdout)");
  v->add_flag("--json", convert.json, "Write JSON adjacency whatever the input format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  if (*b) return cmd_build(build, std::cout, std::cerr);
  if (*c) {
    check.checks = flags;
    return cmd_check(check, std::cout, std::cerr);
  }
  if (*s) return cmd_census(census, std::cout, std::cerr);
  return cmd_convert(convert, std::cout, std::cerr);
}
