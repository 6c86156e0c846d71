#pragma once

// Shared helpers for the test binaries: a dense ray-march visibility
// oracle written independently of the library implementation, random
// scene configurations, and throwaway output directories.

#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "belmap/grid.hpp"
#include "belmap/random.hpp"
#include "belmap/terrain.hpp"

namespace support {

/// Brute-force line-of-sight check: samples the whole ray at a fixed 0.1
/// cell spacing and interpolates the terrain bilinearly at every sample.
inline bool oracle_in_sight(const belmap::GridMap& dem,
                            const belmap::CameraPose& camera, belmap::Index x,
                            belmap::Index y) {
  const double ex = static_cast<double>(camera.x);
  const double ey = static_cast<double>(camera.y);
  const double ez = dem(camera.x, camera.y) + camera.height_above_ground;
  const double tx = static_cast<double>(x);
  const double ty = static_cast<double>(y);
  const double tz = dem(x, y);
  const double dist = std::sqrt((tx - ex) * (tx - ex) + (ty - ey) * (ty - ey));
  const long samples = static_cast<long>(std::ceil(dist / 0.1));
  for (long k = 1; k < samples; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(samples);
    const double px = ex + (tx - ex) * t;
    const double py = ey + (ty - ey) * t;
    const double rz = ez + (tz - ez) * t;
    // independent bilinear interpolation
    long x0 = static_cast<long>(std::floor(px));
    long y0 = static_cast<long>(std::floor(py));
    if (x0 > dem.width() - 2) x0 = dem.width() - 2;
    if (y0 > dem.height() - 2) y0 = dem.height() - 2;
    if (x0 < 0) x0 = 0;
    if (y0 < 0) y0 = 0;
    const double fx = px - static_cast<double>(x0);
    const double fy = py - static_cast<double>(y0);
    const double top =
        dem(x0, y0 + 1) * (1.0 - fx) + dem(x0 + 1, y0 + 1) * fx;
    const double bottom = dem(x0, y0) * (1.0 - fx) + dem(x0 + 1, y0) * fx;
    const double ground = bottom * (1.0 - fy) + top * fy;
    if (rz <= ground) return false;
  }
  return true;
}

inline belmap::GridMap oracle_visibility(const belmap::GridMap& dem,
                                         const belmap::CameraPose& camera) {
  belmap::GridMap out(dem.width(), dem.height());
  for (belmap::Index y = 0; y < dem.height(); ++y) {
    for (belmap::Index x = 0; x < dem.width(); ++x) {
      out(x, y) = oracle_in_sight(dem, camera, x, y) ? 1.0 : 0.0;
    }
  }
  return out;
}

/// Small random scene on a square grid: a handful of rocks, one hot spot,
/// camera at the centre. Deterministic per seed.
inline belmap::SceneConfig random_scene_config(std::uint64_t seed,
                                               belmap::Index side) {
  belmap::SceneConfig config;
  config.width = side;
  config.height = side;
  config.camera = {side / 2, side / 2, 20.0 + 30.0 * belmap::uniform_unit(seed, 0)};
  const auto rocks = 2 + static_cast<int>(belmap::uniform_unit(seed, 1) * 3);
  const double margin = 2.0;
  const double play = static_cast<double>(side - 1) - 2.0 * margin;
  for (int i = 0; i < rocks; ++i) {
    const std::uint64_t base = 10 + 4 * static_cast<std::uint64_t>(i);
    config.rocks.push_back({
        margin + play * belmap::uniform_unit(seed, base),
        margin + play * belmap::uniform_unit(seed, base + 1),
        2.0 + 3.0 * belmap::uniform_unit(seed, base + 2),
        4.0 + 10.0 * belmap::uniform_unit(seed, base + 3),
        1 + static_cast<int>(i % 4),
    });
  }
  config.hot_spots.push_back({margin + play * belmap::uniform_unit(seed, 90),
                              margin + play * belmap::uniform_unit(seed, 91),
                              3.0 + 3.0 * belmap::uniform_unit(seed, 92),
                              45.0 + 10.0 * belmap::uniform_unit(seed, 93)});
  config.seed = seed;
  return config;
}

/// Self-deleting directory under the system temp path.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("belmap_" + tag + "_" + std::to_string(++counter) + "_" +
             std::to_string(
                 static_cast<unsigned long>(::getpid() & 0xFFFF)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path,
                       const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace support
