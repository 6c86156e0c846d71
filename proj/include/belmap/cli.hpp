#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "belmap/pipeline.hpp"

namespace belmap::cli {

/// Exit codes of the command-line tool. Argument-parsing failures use the
/// parser's own codes (>= 100).
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,           // unexpected non-library error
  kConfigInvalid = 2,   // bad scene config, expert table, or domain error
  kIoError = 3,
  kCellOutOfBounds = 4,
  kFixtureFailure = 5,  // selftest found a mismatch
};

/// Maps a thrown library error onto the documented exit code.
int exit_code_for(const std::exception& error);

struct RunConfig {
  std::filesystem::path scene_config;
  std::optional<std::filesystem::path> scene_dir;  // reuse generated CSVs
  std::optional<std::filesystem::path> gradient_expert_path;
  std::optional<std::filesystem::path> temperature_expert_path;
  std::optional<std::filesystem::path> texture_expert_path;
  FusionRule rule = FusionRule::DSmT;
  std::filesystem::path out_dir;
  std::optional<std::uint64_t> seed;  // overrides the config's seed
  std::vector<std::pair<Index, Index>> cells;
};

/// Expert tables from the configured paths, defaults where unset.
ExpertSet load_experts(const RunConfig& config);

/// "x,y;x,y" -> coordinate list. Throws ConfigInvalid on malformed input.
std::vector<std::pair<Index, Index>> parse_cell_list(const std::string& text);

/// Generates the scene and writes the six layers as CSV + PGM together
/// with a manifest recording the config hash and seed.
void run_generate(const RunConfig& config, std::ostream& log);

/// Builds the interest map under the configured rule and writes it as
/// CSV + PGM plus a diagnostics file listing cells that failed to fuse.
void run_fuse(const RunConfig& config, std::ostream& log);

/// Prints cell reports (text to `log`) and, when an output directory is
/// configured, writes the JSON document. Cells default to the config's
/// report_cell list.
void run_report(const RunConfig& config, std::ostream& log);

/// Reproduces the built-in worked fixtures with the configured expert
/// tables, printing one line per fixture with its largest deviation.
/// Returns false when any fixture fails.
bool run_selftest(const RunConfig& config, std::ostream& log);

}  // namespace belmap::cli
