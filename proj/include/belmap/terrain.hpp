#pragma once

#include <cstdint>
#include <vector>

#include "belmap/grid.hpp"

namespace belmap {

/// Radial profile used for rock bumps. Cosine reaches zero exactly at the
/// rock radius; Gaussian (sigma = radius / 3) is truncated there.
enum class RockProfile : std::uint8_t { Cosine, Gaussian };

struct RockFeature {
  double cx = 0.0;
  double cy = 0.0;
  double radius = 1.0;
  double height = 1.0;
  int texture_code = 0;
};

struct HotSpot {
  double cx = 0.0;
  double cy = 0.0;
  double radius = 1.0;
  double peak_temperature = 0.0;
};

/// Axis-aligned rectangle of texture codes, inclusive corners.
struct TextureRegion {
  Index x0 = 0;
  Index y0 = 0;
  Index x1 = 0;
  Index y1 = 0;
  int code = 0;
};

struct UncertaintyRange {
  double low = 0.0;
  double high = 1.0;
};

struct SceneConfig {
  Index width = 100;
  Index height = 100;
  CameraPose camera{50, 50, 40.0};
  double base_elevation = 0.0;
  double base_temperature = 3.0;
  RockProfile rock_profile = RockProfile::Cosine;
  std::vector<RockFeature> rocks;
  std::vector<HotSpot> hot_spots;
  int texture_background = 0;
  std::vector<TextureRegion> texture_regions;
  UncertaintyRange dem_noise{0.0, 0.2};
  UncertaintyRange temperature_uncertainty{0.0, 1.0};
  UncertaintyRange texture_uncertainty{0.0, 1.0};
  std::uint64_t seed = 0;
  /// Cells the report command prints when none are given on the command
  /// line; the first one doubles as the designated conflict cell of the
  /// shipped scene.
  std::vector<std::pair<Index, Index>> report_cells;
};

/// Throws ConfigInvalid naming the offending entry.
void validate(const SceneConfig& config);

/// All layers share the same dimensions; the uncertainty layers live in
/// [0, 1]. Hidden terrain is encoded in dem_uncertainty as exactly 1.
struct Scene {
  GridMap dem;
  GridMap dem_uncertainty;
  GridMap temperature;
  GridMap temperature_uncertainty;
  TextureMap texture;
  GridMap texture_uncertainty;
  CameraPose camera;
};

/// Deterministic synthetic scene: flat plane plus rock bumps, cold base
/// temperature plus circular hot spots, region-painted textures, and the
/// three uncertainty layers (visibility-plus-noise for the DEM, linear
/// ramps for temperature and texture). `seed` drives the DEM noise.
Scene generate_synthetic_scene(const SceneConfig& config, std::uint64_t seed);

/// Magnitude of the elevation gradient at one cell: central differences in
/// the interior, one-sided on the borders, unit spacing.
double gradient_at(const GridMap& dem, Index x, Index y);

/// Per-cell gradient magnitude map. Throws GridTooSmall below 2x2.
GridMap gradient_magnitude(const GridMap& dem);

/// Line-of-sight map: 1 where the segment from the camera eye point to the
/// cell's surface stays strictly above the bilinearly interpolated terrain
/// at every intermediate sample (spacing 0.1 cells), else 0. The camera's
/// own cell is visible.
GridMap visibility(const GridMap& dem, const CameraPose& camera);

/// Elevation uncertainty: hidden cells (vis == 0) get 1, visible cells an
/// independent uniform draw in [low, high) keyed by (seed, cell index).
GridMap dem_uncertainty(const GridMap& vis, std::uint64_t seed,
                        double low = 0.0, double high = 0.2);

enum class RampDirection : std::uint8_t { BottomToTop, RightToLeft };

/// Uncertainty ramp: `low` at the start edge (bottom row y = 0, or the
/// rightmost column) rising linearly to `high` at the far edge, constant
/// along the other axis. Requires 0 <= low <= high <= 1.
GridMap linear_uncertainty(Index width, Index height, RampDirection direction,
                           double low, double high);

}  // namespace belmap
