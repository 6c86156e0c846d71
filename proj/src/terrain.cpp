#include "belmap/terrain.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "belmap/random.hpp"

namespace belmap {

namespace {

double rock_bump(RockProfile profile, double r, double radius, double height) {
  if (r >= radius) return 0.0;
  switch (profile) {
    case RockProfile::Cosine:
      return 0.5 * height * (1.0 + std::cos(std::numbers::pi * r / radius));
    case RockProfile::Gaussian: {
      const double sigma = radius / 3.0;
      return height * std::exp(-0.5 * (r / sigma) * (r / sigma));
    }
  }
  return 0.0;
}

/// Bilinear terrain height at a fractional position inside the grid.
double terrain_height(const GridMap& dem, double px, double py) {
  const Index x0 = std::clamp<Index>(static_cast<Index>(std::floor(px)), 0,
                                     dem.width() - 2);
  const Index y0 = std::clamp<Index>(static_cast<Index>(std::floor(py)), 0,
                                     dem.height() - 2);
  const double fx = px - static_cast<double>(x0);
  const double fy = py - static_cast<double>(y0);
  const double z00 = dem(x0, y0);
  const double z10 = dem(x0 + 1, y0);
  const double z01 = dem(x0, y0 + 1);
  const double z11 = dem(x0 + 1, y0 + 1);
  return z00 * (1.0 - fx) * (1.0 - fy) + z10 * fx * (1.0 - fy) +
         z01 * (1.0 - fx) * fy + z11 * fx * fy;
}

bool cell_in_sight(const GridMap& dem, double eye_x, double eye_y,
                   double eye_z, Index x, Index y) {
  const double tx = static_cast<double>(x);
  const double ty = static_cast<double>(y);
  const double dist = std::hypot(tx - eye_x, ty - eye_y);
  // 0.1-cell spacing: coarser marches miss grazing occlusions that the
  // reference ray march resolves.
  constexpr double kStep = 0.1;
  const auto segments = static_cast<long>(std::ceil(dist / kStep));
  if (segments < 2) return true;  // no intermediate samples to occlude
  const double tz = dem(x, y);
  for (long k = 1; k < segments; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(segments);
    const double rz = eye_z + (tz - eye_z) * t;
    const double ground =
        terrain_height(dem, eye_x + (tx - eye_x) * t, eye_y + (ty - eye_y) * t);
    if (rz <= ground) return false;
  }
  return true;
}

}  // namespace

void validate(const SceneConfig& config) {
  if (config.width < 2 || config.height < 2) {
    throw ConfigInvalid(fmt::format("grid {}x{} is too small, need at least "
                                    "2x2",
                                    config.width, config.height));
  }
  const auto inside = [&](double x, double y) {
    return x >= 0.0 && x <= static_cast<double>(config.width - 1) &&
           y >= 0.0 && y <= static_cast<double>(config.height - 1);
  };
  if (config.camera.x < 0 || config.camera.x >= config.width ||
      config.camera.y < 0 || config.camera.y >= config.height) {
    throw ConfigInvalid(fmt::format("camera cell ({}, {}) outside the grid",
                                    config.camera.x, config.camera.y));
  }
  if (config.camera.height_above_ground <= 0.0) {
    throw ConfigInvalid("camera height must be positive");
  }
  for (std::size_t i = 0; i < config.rocks.size(); ++i) {
    const RockFeature& r = config.rocks[i];
    if (!inside(r.cx, r.cy)) {
      throw ConfigInvalid(fmt::format(
          "rock {} centred at ({}, {}) lies outside the grid", i, r.cx, r.cy));
    }
    if (r.radius <= 0.0 || r.height <= 0.0) {
      throw ConfigInvalid(
          fmt::format("rock {} needs positive radius and height", i));
    }
  }
  for (std::size_t i = 0; i < config.hot_spots.size(); ++i) {
    const HotSpot& h = config.hot_spots[i];
    if (!inside(h.cx, h.cy)) {
      throw ConfigInvalid(fmt::format(
          "hot spot {} centred at ({}, {}) lies outside the grid", i, h.cx,
          h.cy));
    }
    if (h.radius <= 0.0) {
      throw ConfigInvalid(fmt::format("hot spot {} needs positive radius", i));
    }
  }
  for (std::size_t i = 0; i < config.texture_regions.size(); ++i) {
    const TextureRegion& t = config.texture_regions[i];
    if (t.x0 > t.x1 || t.y0 > t.y1 || t.x0 < 0 || t.y0 < 0 ||
        t.x1 >= config.width || t.y1 >= config.height) {
      throw ConfigInvalid(
          fmt::format("texture region {} has invalid corners", i));
    }
  }
  for (const UncertaintyRange& u :
       {config.dem_noise, config.temperature_uncertainty,
        config.texture_uncertainty}) {
    if (!(0.0 <= u.low && u.low <= u.high && u.high <= 1.0)) {
      throw ConfigInvalid(fmt::format(
          "uncertainty range [{}, {}] must satisfy 0 <= low <= high <= 1",
          u.low, u.high));
    }
  }
  for (const auto& [x, y] : config.report_cells) {
    if (x < 0 || x >= config.width || y < 0 || y >= config.height) {
      throw ConfigInvalid(
          fmt::format("report cell ({}, {}) outside the grid", x, y));
    }
  }
}

Scene generate_synthetic_scene(const SceneConfig& config, std::uint64_t seed) {
  validate(config);
  const Index w = config.width;
  const Index h = config.height;

  GridMap dem(w, h, config.base_elevation);
  for (Index y = 0; y < h; ++y) {
    for (Index x = 0; x < w; ++x) {
      double z = config.base_elevation;
      for (const RockFeature& rock : config.rocks) {
        const double r = std::hypot(static_cast<double>(x) - rock.cx,
                                    static_cast<double>(y) - rock.cy);
        z += rock_bump(config.rock_profile, r, rock.radius, rock.height);
      }
      dem(x, y) = z;
    }
  }

  GridMap temperature(w, h, config.base_temperature);
  for (Index y = 0; y < h; ++y) {
    for (Index x = 0; x < w; ++x) {
      double t = config.base_temperature;
      for (const HotSpot& spot : config.hot_spots) {
        const double r = std::hypot(static_cast<double>(x) - spot.cx,
                                    static_cast<double>(y) - spot.cy);
        t += rock_bump(RockProfile::Cosine, r, spot.radius,
                       spot.peak_temperature - config.base_temperature);
      }
      temperature(x, y) = t;
    }
  }

  TextureMap texture(w, h, config.texture_background);
  for (const TextureRegion& region : config.texture_regions) {
    texture.values()
        .block(region.y0, region.x0, region.y1 - region.y0 + 1,
               region.x1 - region.x0 + 1)
        .setConstant(region.code);
  }
  // Rocks carry their own material, painted over the regional pattern.
  for (const RockFeature& rock : config.rocks) {
    for (Index y = 0; y < h; ++y) {
      for (Index x = 0; x < w; ++x) {
        const double r = std::hypot(static_cast<double>(x) - rock.cx,
                                    static_cast<double>(y) - rock.cy);
        if (r < rock.radius) texture(x, y) = rock.texture_code;
      }
    }
  }

  const GridMap vis = visibility(dem, config.camera);

  Scene scene{
      .dem = std::move(dem),
      .dem_uncertainty = dem_uncertainty(vis, seed, config.dem_noise.low,
                                         config.dem_noise.high),
      .temperature = std::move(temperature),
      .temperature_uncertainty = linear_uncertainty(
          w, h, RampDirection::BottomToTop, config.temperature_uncertainty.low,
          config.temperature_uncertainty.high),
      .texture = std::move(texture),
      .texture_uncertainty = linear_uncertainty(
          w, h, RampDirection::RightToLeft, config.texture_uncertainty.low,
          config.texture_uncertainty.high),
      .camera = config.camera,
  };
  return scene;
}

double gradient_at(const GridMap& dem, Index x, Index y) {
  const Index w = dem.width();
  const Index h = dem.height();
  double dx;
  if (x == 0) {
    dx = dem(1, y) - dem(0, y);
  } else if (x == w - 1) {
    dx = dem(w - 1, y) - dem(w - 2, y);
  } else {
    dx = 0.5 * (dem(x + 1, y) - dem(x - 1, y));
  }
  double dy;
  if (y == 0) {
    dy = dem(x, 1) - dem(x, 0);
  } else if (y == h - 1) {
    dy = dem(x, h - 1) - dem(x, h - 2);
  } else {
    dy = 0.5 * (dem(x, y + 1) - dem(x, y - 1));
  }
  return std::hypot(dx, dy);
}

GridMap gradient_magnitude(const GridMap& dem) {
  if (dem.width() < 2 || dem.height() < 2) {
    throw GridTooSmall("gradient needs a grid of at least 2x2 cells");
  }
  GridMap out(dem.width(), dem.height());
  for (Index y = 0; y < dem.height(); ++y) {
    for (Index x = 0; x < dem.width(); ++x) {
      out(x, y) = gradient_at(dem, x, y);
    }
  }
  return out;
}

GridMap visibility(const GridMap& dem, const CameraPose& camera) {
  if (!dem.contains(camera.x, camera.y)) {
    throw CameraOutOfBounds(fmt::format("camera cell ({}, {}) outside the grid",
                                        camera.x, camera.y));
  }
  const double eye_x = static_cast<double>(camera.x);
  const double eye_y = static_cast<double>(camera.y);
  const double eye_z = dem(camera.x, camera.y) + camera.height_above_ground;
  GridMap out(dem.width(), dem.height());
  for (Index y = 0; y < dem.height(); ++y) {
    for (Index x = 0; x < dem.width(); ++x) {
      out(x, y) = cell_in_sight(dem, eye_x, eye_y, eye_z, x, y) ? 1.0 : 0.0;
    }
  }
  return out;
}

GridMap dem_uncertainty(const GridMap& vis, std::uint64_t seed, double low,
                        double high) {
  GridMap out(vis.width(), vis.height());
  for (Index y = 0; y < vis.height(); ++y) {
    for (Index x = 0; x < vis.width(); ++x) {
      const auto counter =
          static_cast<std::uint64_t>(y * vis.width() + x);
      out(x, y) = vis(x, y) == 0.0
                      ? 1.0
                      : std::clamp(uniform_in(seed, counter, low, high), 0.0,
                                   1.0);
    }
  }
  return out;
}

GridMap linear_uncertainty(Index width, Index height, RampDirection direction,
                           double low, double high) {
  if (!(0.0 <= low && low <= high && high <= 1.0)) {
    throw RangeInvalid(fmt::format(
        "ramp endpoints [{}, {}] must satisfy 0 <= low <= high <= 1", low,
        high));
  }
  GridMap out(width, height);
  if (direction == RampDirection::BottomToTop) {
    const double span = height > 1 ? static_cast<double>(height - 1) : 1.0;
    Eigen::ArrayXd ramp =
        low + (high - low) *
                  Eigen::ArrayXd::LinSpaced(
                      height, 0.0, static_cast<double>(height - 1)) /
                  span;
    out.values().colwise() = ramp;
  } else {
    const double span = width > 1 ? static_cast<double>(width - 1) : 1.0;
    // Rightmost column is the start edge.
    Eigen::ArrayXd ramp =
        low + (high - low) *
                  Eigen::ArrayXd::LinSpaced(
                      width, static_cast<double>(width - 1), 0.0) /
                  span;
    out.values().rowwise() = ramp.transpose();
  }
  return out;
}

}  // namespace belmap
