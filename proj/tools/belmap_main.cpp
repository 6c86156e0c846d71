#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "belmap/cli.hpp"
#include "belmap/errors.hpp"
#include "belmap/pipeline.hpp"

namespace {

struct CliOptions {
  belmap::cli::RunConfig run;
  std::string cells_spec;
  std::string scene_dir;
  std::string gradient_expert;
  std::string temperature_expert;
  std::string texture_expert;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

void add_common_flags(CLI::App* cmd, CliOptions& opts, bool needs_config) {
  auto* config =
      cmd->add_option("--config", opts.run.scene_config,
                      "Scene description file");
  if (needs_config) config->required();
  cmd->add_option("--seed", opts.seed,
                  "Noise seed (overrides the config's seed)")
      ->each([&opts](const std::string&) { opts.seed_given = true; });
  cmd->add_option("--dem-expert", opts.gradient_expert,
                  "Interval expert table for the elevation gradient");
  cmd->add_option("--temperature-expert", opts.temperature_expert,
                  "Interval expert table for the infrared map");
  cmd->add_option("--texture-expert", opts.texture_expert,
                  "Texture expert table");
}

void finalize(CliOptions& opts) {
  if (opts.seed_given) opts.run.seed = opts.seed;
  if (!opts.scene_dir.empty()) opts.run.scene_dir = opts.scene_dir;
  if (!opts.gradient_expert.empty()) {
    opts.run.gradient_expert_path = opts.gradient_expert;
  }
  if (!opts.temperature_expert.empty()) {
    opts.run.temperature_expert_path = opts.temperature_expert;
  }
  if (!opts.texture_expert.empty()) {
    opts.run.texture_expert_path = opts.texture_expert;
  }
  if (!opts.cells_spec.empty()) {
    opts.run.cells = belmap::cli::parse_cell_list(opts.cells_spec);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "belmap: evidential interest maps for rover science planning"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 2 invalid configuration, 3 io error, 4 cell out of\n"
      "bounds, 5 selftest fixture failure; argument errors use the parser's\n"
      "own codes (>= 100) and 1 flags an unexpected internal error.");

  CliOptions opts;
  const std::map<std::string, belmap::FusionRule> rule_names{
      {"dsmt", belmap::FusionRule::DSmT},
      {"dst", belmap::FusionRule::DempsterReassign},
  };

  CLI::App* generate = app.add_subcommand(
      "generate", "Generate the synthetic scene layers and a manifest");
  add_common_flags(generate, opts, true);
  generate->add_option("--out", opts.run.out_dir, "Output directory")
      ->required();

  CLI::App* fuse = app.add_subcommand(
      "fuse", "Fuse the expert evidence into an interest map");
  add_common_flags(fuse, opts, true);
  fuse->add_option("--out", opts.run.out_dir, "Output directory")->required();
  fuse->add_option("--rule", opts.run.rule, "Combination rule")
      ->transform(CLI::CheckedTransformer(rule_names, CLI::ignore_case));
  fuse->add_option("--scene-dir", opts.scene_dir,
                   "Reuse layers previously written by 'generate'");

  CLI::App* report = app.add_subcommand(
      "report", "Per-cell evidence reports under both rules");
  add_common_flags(report, opts, true);
  report->add_option("--cells", opts.cells_spec,
                     "Cells to report as x,y[;x,y...] (defaults to the "
                     "config's report_cell list)");
  report->add_option("--out", opts.run.out_dir,
                     "Directory for report.json (text goes to stdout)");
  report->add_option("--scene-dir", opts.scene_dir,
                     "Reuse layers previously written by 'generate'");

  CLI::App* selftest = app.add_subcommand(
      "selftest", "Check the built-in worked examples and print deltas");
  add_common_flags(selftest, opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    finalize(opts);
    if (generate->parsed()) {
      belmap::cli::run_generate(opts.run, std::cout);
    } else if (fuse->parsed()) {
      belmap::cli::run_fuse(opts.run, std::cout);
    } else if (report->parsed()) {
      belmap::cli::run_report(opts.run, std::cout);
    } else if (selftest->parsed()) {
      if (!belmap::cli::run_selftest(opts.run, std::cout)) {
        return belmap::cli::kFixtureFailure;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return belmap::cli::exit_code_for(e);
  }
  return belmap::cli::kOk;
}
