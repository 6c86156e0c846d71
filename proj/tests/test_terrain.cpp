#include <doctest.h>

#include <cmath>

#include "belmap/errors.hpp"
#include "belmap/random.hpp"
#include "belmap/terrain.hpp"
#include "support.hpp"

using namespace belmap;

#define CHECK_CLOSE(a, e, tol) CHECK(std::abs((a) - (e)) <= (tol))

TEST_SUITE("terrain") {

TEST_CASE("grid stores cells x-major with bounds checking helpers") {
  GridMap g(4, 3, 0.5);
  CHECK(g.width() == 4);
  CHECK(g.height() == 3);
  CHECK(g.size() == 12);
  g(3, 2) = 7.0;
  CHECK(g.values()(2, 3) == 7.0);
  CHECK(g.contains(0, 0));
  CHECK(!g.contains(4, 0));
  CHECK(!g.contains(0, -1));
  CHECK_THROWS_AS(GridMap(0, 3), GridTooSmall);
  CHECK_THROWS_AS(GridMap(-1, 3), GridTooSmall);
  CHECK_THROWS_AS(TextureMap(4, -2), GridTooSmall);
}

TEST_CASE("gradient of constant terrain is zero") {
  const GridMap flat(8, 8, 3.5);
  const GridMap g = gradient_magnitude(flat);
  CHECK(g.values().maxCoeff() == 0.0);
}

TEST_CASE("gradient of a linear ramp matches the analytic slope") {
  GridMap ramp(10, 6);
  for (Index y = 0; y < ramp.height(); ++y) {
    for (Index x = 0; x < ramp.width(); ++x) {
      ramp(x, y) = 3.0 * static_cast<double>(x);
    }
  }
  const GridMap g = gradient_magnitude(ramp);
  for (Index y = 0; y < g.height(); ++y) {
    for (Index x = 0; x < g.width(); ++x) {
      CHECK_CLOSE(g(x, y), 3.0, 1e-12);
    }
  }
}

TEST_CASE("gradient needs at least a 2x2 grid") {
  CHECK_THROWS_AS(gradient_magnitude(GridMap(1, 5)), GridTooSmall);
  CHECK_THROWS_AS(gradient_magnitude(GridMap(5, 1)), GridTooSmall);
}

TEST_CASE("gradient tracks the analytic derivative of a smooth bump") {
  // Gaussian bump, amplitude 10, sigma 4, centred on a 41x41 grid.
  const double amplitude = 10.0;
  const double sigma = 4.0;
  const double c = 20.0;
  GridMap dem(41, 41);
  for (Index y = 0; y < 41; ++y) {
    for (Index x = 0; x < 41; ++x) {
      const double r2 = (x - c) * (x - c) + (y - c) * (y - c);
      dem(x, y) = amplitude * std::exp(-r2 / (2.0 * sigma * sigma));
    }
  }
  const GridMap g = gradient_magnitude(dem);
  double worst = 0.0;
  for (Index y = 1; y < 40; ++y) {
    for (Index x = 1; x < 40; ++x) {
      const double r = std::hypot(x - c, y - c);
      const double analytic = amplitude * r / (sigma * sigma) *
                              std::exp(-r * r / (2.0 * sigma * sigma));
      worst = std::max(worst, std::abs(g(x, y) - analytic));
    }
  }
  // Central differences on unit spacing: discretization error stays small
  // relative to the peak slope of ~1.5.
  CHECK(worst < 0.05);
  // Structure: flat at the crown, steepest on the flank ring near r = sigma.
  CHECK(g(20, 20) < 0.01);
  CHECK(g(24, 20) > 1.0);
  CHECK(g(40, 40) < 0.01);
}

TEST_CASE("flat terrain is fully visible") {
  const GridMap flat(16, 16, 2.0);
  const GridMap vis = visibility(flat, {8, 8, 10.0});
  CHECK(vis.values().minCoeff() == 1.0);
}

TEST_CASE("a tall rock shadows the terrain behind it") {
  SceneConfig config;
  config.width = 40;
  config.height = 40;
  config.camera = {5, 20, 10.0};
  config.rocks.push_back({20.0, 20.0, 4.0, 12.0, 1});
  const Scene scene = generate_synthetic_scene(config, 1);
  const GridMap vis = visibility(scene.dem, config.camera);
  // In front of the rock: visible. Far side of the rock: shadowed.
  CHECK(vis(10, 20) == 1.0);
  CHECK(vis(24, 20) == 0.0);
  CHECK(vis(27, 20) == 0.0);
  // The shadow ends where the sight line clears the crest again.
  CHECK(vis(39, 39) == 1.0);
  // The camera's own cell is visible by definition.
  CHECK(vis(5, 20) == 1.0);
}

TEST_CASE("visibility requires the camera inside the grid") {
  const GridMap flat(8, 8);
  CHECK_THROWS_AS(visibility(flat, {8, 0, 10.0}), CameraOutOfBounds);
  CHECK_THROWS_AS(visibility(flat, {0, -1, 10.0}), CameraOutOfBounds);
}

TEST_CASE("visibility agrees with the dense ray-march oracle") {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const SceneConfig config = support::random_scene_config(seed, 24);
    const Scene scene = generate_synthetic_scene(config, seed);
    const GridMap fast = visibility(scene.dem, config.camera);
    const GridMap dense = support::oracle_visibility(scene.dem, config.camera);
    CHECK((fast.values() == dense.values()).all());
  }
}

TEST_CASE("raising the camera never hides a visible cell") {
  const SceneConfig config = support::random_scene_config(21, 24);
  const Scene scene = generate_synthetic_scene(config, 21);
  CameraPose low = config.camera;
  for (double extra : {5.0, 15.0, 40.0}) {
    CameraPose high = low;
    high.height_above_ground += extra;
    const GridMap vis_low = visibility(scene.dem, low);
    const GridMap vis_high = visibility(scene.dem, high);
    CHECK((vis_high.values() >= vis_low.values()).all());
  }
}

TEST_CASE("dem uncertainty marks hidden cells and jitters visible ones") {
  GridMap vis(6, 6, 1.0);
  vis(2, 3) = 0.0;
  vis(5, 5) = 0.0;
  const GridMap u = dem_uncertainty(vis, 99);
  CHECK(u(2, 3) == 1.0);
  CHECK(u(5, 5) == 1.0);
  for (Index y = 0; y < 6; ++y) {
    for (Index x = 0; x < 6; ++x) {
      if (vis(x, y) == 1.0) {
        CHECK(u(x, y) >= 0.0);
        CHECK(u(x, y) < 0.2);
      }
    }
  }

  const GridMap all_hidden = dem_uncertainty(GridMap(4, 4, 0.0), 7);
  CHECK(all_hidden.values().minCoeff() == 1.0);

  // Determinism per seed, fresh draws per seed.
  const GridMap again = dem_uncertainty(vis, 99);
  CHECK((u.values() == again.values()).all());
  const GridMap other = dem_uncertainty(vis, 100);
  CHECK(!(u.values() == other.values()).all());
}

TEST_CASE("linear uncertainty ramps between the stated edges") {
  const GridMap zero = linear_uncertainty(5, 5, RampDirection::BottomToTop,
                                          0.0, 0.0);
  CHECK(zero.values().maxCoeff() == 0.0);

  const GridMap up = linear_uncertainty(3, 100, RampDirection::BottomToTop,
                                        0.0, 1.0);
  CHECK(up(1, 0) == 0.0);
  CHECK(up(1, 99) == 1.0);
  CHECK_CLOSE(up(0, 50), 50.0 / 99.0, 1e-12);
  CHECK(up(0, 42) == up(2, 42));  // constant along x

  const GridMap left = linear_uncertainty(100, 3, RampDirection::RightToLeft,
                                          0.0, 1.0);
  CHECK(left(99, 1) == 0.0);
  CHECK(left(0, 1) == 1.0);
  CHECK(left(25, 0) == left(25, 2));  // constant along y

  CHECK_THROWS_AS(linear_uncertainty(4, 4, RampDirection::BottomToTop, 0.5,
                                     0.2),
                  RangeInvalid);
  CHECK_THROWS_AS(linear_uncertainty(4, 4, RampDirection::BottomToTop, -0.1,
                                     0.5),
                  RangeInvalid);
  CHECK_THROWS_AS(linear_uncertainty(4, 4, RampDirection::RightToLeft, 0.5,
                                     1.2),
                  RangeInvalid);
}

TEST_CASE("a featureless scene is flat, cold and fully certain terrain") {
  SceneConfig config;
  config.width = 12;
  config.height = 12;
  config.camera = {6, 6, 40.0};
  config.dem_noise = {0.0, 0.0};
  const Scene scene = generate_synthetic_scene(config, 5);
  CHECK(scene.dem.values().maxCoeff() == config.base_elevation);
  CHECK(scene.temperature.values().maxCoeff() == config.base_temperature);
  CHECK(gradient_magnitude(scene.dem).values().maxCoeff() == 0.0);
  CHECK(scene.dem_uncertainty.values().maxCoeff() == 0.0);  // all visible
  CHECK((scene.texture.values() == config.texture_background).all());
}

TEST_CASE("scene generation is deterministic per (config, seed)") {
  const SceneConfig config = support::random_scene_config(31, 32);
  const Scene a = generate_synthetic_scene(config, 123);
  const Scene b = generate_synthetic_scene(config, 123);
  CHECK((a.dem.values() == b.dem.values()).all());
  CHECK((a.dem_uncertainty.values() == b.dem_uncertainty.values()).all());
  CHECK((a.temperature.values() == b.temperature.values()).all());
  CHECK((a.temperature_uncertainty.values() ==
         b.temperature_uncertainty.values())
            .all());
  CHECK((a.texture.values() == b.texture.values()).all());
  CHECK((a.texture_uncertainty.values() == b.texture_uncertainty.values())
            .all());
}

TEST_CASE("scene layers share dimensions and uncertainty stays in [0,1]") {
  const SceneConfig config = support::random_scene_config(41, 28);
  const Scene scene = generate_synthetic_scene(config, 77);
  CHECK(scene.dem.same_shape(scene.dem_uncertainty));
  CHECK(scene.dem.same_shape(scene.temperature));
  CHECK(scene.dem.same_shape(scene.temperature_uncertainty));
  CHECK(scene.dem.same_shape(scene.texture_uncertainty));
  CHECK(scene.texture.width() == scene.dem.width());
  CHECK(scene.texture.height() == scene.dem.height());
  for (const GridMap* u : {&scene.dem_uncertainty,
                           &scene.temperature_uncertainty,
                           &scene.texture_uncertainty}) {
    CHECK(u->values().minCoeff() >= 0.0);
    CHECK(u->values().maxCoeff() <= 1.0);
  }
}

TEST_CASE("scene validation names the offending feature") {
  SceneConfig config;
  config.width = 10;
  config.height = 10;
  config.camera = {5, 5, 10.0};
  config.rocks.push_back({3.0, 3.0, 2.0, 5.0, 1});
  config.rocks.push_back({50.0, 3.0, 2.0, 5.0, 1});
  CHECK_THROWS_WITH_AS(generate_synthetic_scene(config, 1),
                       doctest::Contains("rock 1"), ConfigInvalid);

  SceneConfig bad_camera;
  bad_camera.width = 10;
  bad_camera.height = 10;
  bad_camera.camera = {20, 5, 10.0};
  CHECK_THROWS_AS(generate_synthetic_scene(bad_camera, 1), ConfigInvalid);

  SceneConfig bad_dims;
  bad_dims.width = 0;
  bad_dims.height = 10;
  CHECK_THROWS_AS(generate_synthetic_scene(bad_dims, 1), ConfigInvalid);

  SceneConfig bad_range;
  bad_range.width = 10;
  bad_range.height = 10;
  bad_range.camera = {5, 5, 10.0};
  bad_range.dem_noise = {0.5, 0.1};
  CHECK_THROWS_AS(generate_synthetic_scene(bad_range, 1), ConfigInvalid);
}

TEST_CASE("rock profiles build radially symmetric bumps") {
  for (RockProfile profile : {RockProfile::Cosine, RockProfile::Gaussian}) {
    SceneConfig config;
    config.width = 30;
    config.height = 30;
    config.camera = {15, 15, 40.0};
    config.rock_profile = profile;
    config.rocks.push_back({15.0, 15.0, 6.0, 10.0, 2});
    const Scene scene = generate_synthetic_scene(config, 3);
    CHECK_CLOSE(scene.dem(15, 15), 10.0, 1e-9);  // peak at the centre
    CHECK(scene.dem(15 + 4, 15) == scene.dem(15, 15 + 4));  // symmetry
    CHECK(scene.dem(2, 2) == 0.0);  // outside the radius
    CHECK(scene.texture(15, 15) == 2);
    CHECK(scene.texture(2, 2) == config.texture_background);
  }
}

TEST_CASE("hot spots heat a circular area above the cold base") {
  SceneConfig config;
  config.width = 30;
  config.height = 30;
  config.camera = {15, 15, 40.0};
  config.hot_spots.push_back({10.0, 10.0, 5.0, 50.0});
  const Scene scene = generate_synthetic_scene(config, 3);
  CHECK_CLOSE(scene.temperature(10, 10), 50.0, 1e-9);
  CHECK(scene.temperature(25, 25) == config.base_temperature);
  // Cold everywhere outside the spot.
  Index hot_cells = 0;
  for (Index y = 0; y < 30; ++y) {
    for (Index x = 0; x < 30; ++x) {
      if (scene.temperature(x, y) >= 5.0) {
        ++hot_cells;
        CHECK(std::hypot(x - 10.0, y - 10.0) < 5.0);
      }
    }
  }
  CHECK(hot_cells > 0);
}

}  // TEST_SUITE
