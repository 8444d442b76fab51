// lambdax: minimal left ideals of superextensions of finite groups.

#include <iostream>

#include "CLI11.hpp"
#include "lambdax/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Structure of minimal left ideals of λ(X) for finite groups X"};
  app.require_subcommand(1);

  std::string           spec;
  lambdax::AnalyzeFlags aflags;
  auto*                 analyze = app.add_subcommand("analyze", "analyze one group");
  analyze->add_option("spec", spec, "group spec, e.g. C2xC4, Q8, file:g.json")->required();
  analyze->add_flag("--brute", aflags.brute, "also materialize λ(X) and cross-check");
  analyze->add_flag("--json", aflags.json, "emit the report as JSON");
  analyze->add_option("--budget", aflags.budget, "max |λ(X)| for the brute path");
  analyze->add_option("--seed", aflags.seed, "seed for randomized spot-checks");

  bool  table_json = false;
  auto* table      = app.add_subcommand("table", "reproduce the reference table");
  table->add_flag("--json", table_json, "emit JSON");

  std::string            count_spec;
  lambdax::MlsCountFlags cflags;
  std::string            out_file;
  auto* count = app.add_subcommand("mls-count", "count maximal linked systems");
  count->add_option("spec", count_spec, "group spec (only the order matters)")->required();
  count->add_option("--out", out_file, "write the signature stream here");
  count->add_option("--budget", cflags.budget, "stop after this many systems");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return lambdax::kExitInput;
  }

  if (*analyze) {
    return lambdax::cmd_analyze(spec, aflags, std::cout, std::cerr);
  }
  if (*table) {
    return lambdax::cmd_table(table_json, std::cout, std::cerr);
  }
  if (!out_file.empty()) {
    cflags.out_file = out_file;
  }
  return lambdax::cmd_mls_count(count_spec, cflags, std::cout, std::cerr);
}
