#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "belmap/experts.hpp"
#include "belmap/grid.hpp"
#include "belmap/pipeline.hpp"
#include "belmap/terrain.hpp"

namespace belmap::io {

// CSV layers are the lossless interchange format: row-major, one grid row
// per line starting with y = 0, comma separated, LF line endings, 17
// significant digits for real-valued layers. PGM (plain P2) is a lossy
// visual rendering: values are mapped linearly onto 0..255 with the scale
// recorded in a comment line, rows written north-up (top line is the
// highest y).

void write_csv(const GridMap& map, std::ostream& out);
void write_csv(const TextureMap& map, std::ostream& out);
void write_csv(const GridMap& map, const std::filesystem::path& path);
void write_csv(const TextureMap& map, const std::filesystem::path& path);

GridMap read_csv(std::istream& in, const std::string& name = "<stream>");
GridMap read_csv(const std::filesystem::path& path);
TextureMap read_texture_csv(const std::filesystem::path& path);

void write_pgm(const GridMap& map, std::ostream& out,
               const std::string& label = "");
void write_pgm(const GridMap& map, const std::filesystem::path& path,
               const std::string& label = "");

/// FNV-1a 64-bit hash of a file's bytes, as recorded in run manifests.
std::uint64_t fnv1a64(const std::filesystem::path& path);

/// Scene description file. Line-oriented: `#` starts a comment, the first
/// token of a line is the key. Keys: grid, camera, base_elevation,
/// base_temperature, rock_profile, rock, hotspot, texture_background,
/// texture_region, dem_noise, temperature_uncertainty,
/// texture_uncertainty, seed, report_cell.
SceneConfig read_scene_config(const std::filesystem::path& path);
SceneConfig parse_scene_config(std::istream& in, const std::string& name);

/// Expert table file. `kind interval` tables list `bin <lo> <hi|inf> <mP>
/// <mNI> <mI>` lines; `kind texture` tables list `default <triple>` and
/// `code <n> <triple>` lines.
IntervalExpertTable read_interval_expert(const std::filesystem::path& path);
TextureExpertTable read_texture_expert(const std::filesystem::path& path);

/// JSON document mirroring the cell-report layout (per-expert readings,
/// the reassigned masses, and the combined evidence under both rules).
std::string report_to_json(const std::vector<CellReport>& reports);

/// Plain-text rendering of the same reports for terminal output.
std::string report_to_text(const std::vector<CellReport>& reports);

}  // namespace belmap::io
