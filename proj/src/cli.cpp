#include "belmap/cli.hpp"

#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "belmap/errors.hpp"
#include "belmap/io.hpp"

namespace belmap::cli {

namespace fs = std::filesystem;

int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const CellOutOfBounds*>(&error)) return kCellOutOfBounds;
  if (dynamic_cast<const IoError*>(&error)) return kIoError;
  if (dynamic_cast<const Error*>(&error)) return kConfigInvalid;
  return kUsage;
}

ExpertSet load_experts(const RunConfig& config) {
  ExpertSet experts = ExpertSet::defaults();
  if (config.gradient_expert_path) {
    experts.gradient = io::read_interval_expert(*config.gradient_expert_path);
  }
  if (config.temperature_expert_path) {
    experts.temperature =
        io::read_interval_expert(*config.temperature_expert_path);
  }
  if (config.texture_expert_path) {
    experts.texture = io::read_texture_expert(*config.texture_expert_path);
  }
  return experts;
}

std::vector<std::pair<Index, Index>> parse_cell_list(const std::string& text) {
  std::vector<std::pair<Index, Index>> cells;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    const std::size_t comma = item.find(',');
    if (comma == std::string::npos) {
      throw ConfigInvalid(
          fmt::format("cell '{}' is not of the form x,y", item));
    }
    try {
      cells.emplace_back(std::stol(item.substr(0, comma)),
                         std::stol(item.substr(comma + 1)));
    } catch (const std::exception&) {
      throw ConfigInvalid(
          fmt::format("cell '{}' is not of the form x,y", item));
    }
    start = end + 1;
  }
  return cells;
}

namespace {

struct GeneratedScene {
  Scene scene;
  SceneConfig config;
  std::uint64_t seed = 0;
};

GeneratedScene make_scene(const RunConfig& run) {
  const SceneConfig config = io::read_scene_config(run.scene_config);
  const std::uint64_t seed = run.seed.value_or(config.seed);
  return {generate_synthetic_scene(config, seed), config, seed};
}

Scene load_scene_dir(const fs::path& dir, const SceneConfig& config) {
  Scene scene{
      .dem = io::read_csv(dir / "dem.csv"),
      .dem_uncertainty = io::read_csv(dir / "dem_uncertainty.csv"),
      .temperature = io::read_csv(dir / "temperature.csv"),
      .temperature_uncertainty =
          io::read_csv(dir / "temperature_uncertainty.csv"),
      .texture = io::read_texture_csv(dir / "texture.csv"),
      .texture_uncertainty = io::read_csv(dir / "texture_uncertainty.csv"),
      .camera = config.camera,
  };
  const bool consistent = scene.dem.same_shape(scene.dem_uncertainty) &&
                          scene.dem.same_shape(scene.temperature) &&
                          scene.dem.same_shape(scene.temperature_uncertainty) &&
                          scene.dem.width() == scene.texture.width() &&
                          scene.dem.height() == scene.texture.height() &&
                          scene.dem.same_shape(scene.texture_uncertainty);
  if (!consistent) {
    throw ConfigInvalid(
        fmt::format("layers in '{}' disagree on dimensions", dir.string()));
  }
  if (!scene.dem.contains(config.camera.x, config.camera.y)) {
    throw ConfigInvalid(fmt::format(
        "camera cell ({}, {}) outside the loaded {}x{} scene",
        config.camera.x, config.camera.y, scene.dem.width(),
        scene.dem.height()));
  }
  return scene;
}

void ensure_out_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError(fmt::format("cannot create output directory '{}': {}",
                              dir.string(), ec.message()));
  }
}

}  // namespace

void run_generate(const RunConfig& run, std::ostream& log) {
  const GeneratedScene generated = make_scene(run);
  const Scene& scene = generated.scene;
  ensure_out_dir(run.out_dir);

  const auto emit = [&](const std::string& name, const GridMap& map) {
    io::write_csv(map, run.out_dir / (name + ".csv"));
    io::write_pgm(map, run.out_dir / (name + ".pgm"), name);
  };
  emit("dem", scene.dem);
  emit("dem_uncertainty", scene.dem_uncertainty);
  emit("temperature", scene.temperature);
  emit("temperature_uncertainty", scene.temperature_uncertainty);
  emit("texture_uncertainty", scene.texture_uncertainty);
  io::write_csv(scene.texture, run.out_dir / "texture.csv");
  {
    // PGM wants reals; texture codes render fine through a copy.
    GridMap codes(scene.texture.width(), scene.texture.height());
    codes.values() = scene.texture.values().cast<double>();
    io::write_pgm(codes, run.out_dir / "texture.pgm", "texture");
  }

  std::ofstream manifest(run.out_dir / "manifest.txt", std::ios::binary);
  if (!manifest) {
    throw IoError("cannot write manifest.txt");
  }
  manifest << fmt::format("config_hash {:016x}\n",
                          io::fnv1a64(run.scene_config));
  manifest << fmt::format("seed {}\n", generated.seed);
  manifest << fmt::format("grid {} {}\n", scene.dem.width(),
                          scene.dem.height());
  manifest << "noise_generator splitmix64-counter\n";

  log << fmt::format("wrote 6 layers (csv + pgm) and manifest.txt to {}\n",
                     run.out_dir.string());
}

void run_fuse(const RunConfig& run, std::ostream& log) {
  const SceneConfig config = io::read_scene_config(run.scene_config);
  Scene scene = run.scene_dir
                    ? load_scene_dir(*run.scene_dir, config)
                    : generate_synthetic_scene(
                          config, run.seed.value_or(config.seed));
  const ExpertSet experts = load_experts(run);
  const InterestMap interest = build_interest_map(scene, experts, run.rule);
  ensure_out_dir(run.out_dir);

  const std::string stem = "interest_" + to_string(run.rule);
  io::write_csv(interest.belief, run.out_dir / (stem + ".csv"));
  io::write_pgm(interest.belief, run.out_dir / (stem + ".pgm"), stem);

  std::ofstream diag(run.out_dir / ("diagnostics_" + to_string(run.rule) +
                                    ".txt"),
                     std::ios::binary);
  if (!diag) throw IoError("cannot write diagnostics file");
  for (const CellDiagnostic& d : interest.diagnostics) {
    diag << fmt::format("{},{}: {}\n", d.x, d.y, d.message);
  }

  Index max_x = 0;
  Index max_y = 0;
  double max_belief = -1.0;
  for (Index y = 0; y < interest.belief.height(); ++y) {
    for (Index x = 0; x < interest.belief.width(); ++x) {
      if (interest.belief(x, y) > max_belief) {
        max_belief = interest.belief(x, y);
        max_x = x;
        max_y = y;
      }
    }
  }
  log << fmt::format(
      "{}: max Bel(interesting) = {:.6f} at ({}, {}); {} problem cell(s)\n",
      stem, max_belief, max_x, max_y, interest.diagnostics.size());
}

void run_report(const RunConfig& run, std::ostream& log) {
  const SceneConfig config = io::read_scene_config(run.scene_config);
  const Scene scene =
      run.scene_dir ? load_scene_dir(*run.scene_dir, config)
                    : generate_synthetic_scene(
                          config, run.seed.value_or(config.seed));
  const ExpertSet experts = load_experts(run);
  const auto& cells = run.cells.empty() ? config.report_cells : run.cells;

  std::vector<CellReport> reports;
  reports.reserve(cells.size());
  for (const auto& [x, y] : cells) {
    reports.push_back(cell_report(scene, experts, x, y));
  }

  log << io::report_to_text(reports);
  if (!run.out_dir.empty()) {
    ensure_out_dir(run.out_dir);
    std::ofstream out(run.out_dir / "report.json", std::ios::binary);
    if (!out) throw IoError("cannot write report.json");
    out << io::report_to_json(reports);
  }
}

// --- selftest --------------------------------------------------------------

namespace {

struct Check {
  std::string label;
  double actual;
  double expected;
};

struct Fixture {
  std::string name;
  double tolerance;
  std::vector<Check> checks;
};

void push_mass_checks(std::vector<Check>& checks, const std::string& prefix,
                      const MassAssignment& actual, double paradox,
                      double not_interesting, double interesting,
                      double uncertain) {
  checks.push_back({prefix + " m(P)", actual.paradox(), paradox});
  checks.push_back(
      {prefix + " m(NI)", actual.not_interesting(), not_interesting});
  checks.push_back({prefix + " m(I)", actual.interesting(), interesting});
  checks.push_back({prefix + " m(U)", actual.uncertain(), uncertain});
}

bool report_fixture(const Fixture& fixture, std::ostream& log) {
  double worst = 0.0;
  std::string worst_label = "-";
  for (const Check& c : fixture.checks) {
    const double delta = std::abs(c.actual - c.expected);
    if (delta > worst) {
      worst = delta;
      worst_label = c.label;
    }
  }
  const bool pass = worst <= fixture.tolerance;
  log << fmt::format("{}  {:<26} max|delta| = {:.3e}  (tol {:.0e}, at {})\n",
                     pass ? "PASS" : "FAIL", fixture.name, worst,
                     fixture.tolerance, worst_label);
  return pass;
}

}  // namespace

bool run_selftest(const RunConfig& run, std::ostream& log) {
  const ExpertSet experts = load_experts(run);
  std::vector<Fixture> fixtures;

  // Two nearly contradictory sources: one convinced the spot is
  // interesting, one convinced it is not, both with a sliver of doubt.
  const MassAssignment conflict_a = make_mass(0.0, 0.0, 0.99, 0.01);
  const MassAssignment conflict_b = make_mass(0.0, 0.99, 0.0, 0.01);

  {
    Fixture f{"conflict_pair_dsmt", 1e-9, {}};
    const MassAssignment fused = fuse_dsmt(conflict_a, conflict_b);
    push_mass_checks(f.checks, "combined", fused, 0.9801, 0.0099, 0.0099,
                     0.0001);
    f.checks.push_back(
        {"Bel(I)", belief(fused, FocalElement::Interesting), 0.99});
    fixtures.push_back(std::move(f));
  }
  {
    Fixture f{"conflict_pair_dst", 1e-4, {}};
    const MassAssignment fused = fuse_dst(conflict_a, conflict_b);
    push_mass_checks(f.checks, "combined", fused, 0.0, 0.4975, 0.4975, 0.005);
    f.checks.push_back(
        {"Bel(I)", belief(fused, FocalElement::Interesting), 0.4975});
    fixtures.push_back(std::move(f));
  }

  // Worked three-expert cell: steep visible terrain (gradient 6.088,
  // certain), catalogued texture 4 read at uncertainty 0.66, cold ground
  // (10.23) at uncertainty 0.19.
  const CellReport cell =
      report_from_readings(experts, 6.088, 0.0, 4, 0.66, 10.23, 0.19);
  {
    Fixture f{"expert_masses", 1e-3, {}};
    push_mass_checks(f.checks, "gradient", cell.readings[0].mass, 0.15, 0.05,
                     0.8, 0.0);
    push_mass_checks(f.checks, "texture", cell.readings[1].mass, 0.017, 0.0,
                     0.323, 0.66);
    push_mass_checks(f.checks, "temperature", cell.readings[2].mass, 0.162,
                     0.648, 0.0, 0.19);
    fixtures.push_back(std::move(f));
  }
  {
    Fixture f{"three_expert_dsmt", 1e-6, {}};
    push_mass_checks(f.checks, "combined", cell.dsmt, 0.82293004, 0.027654,
                     0.149416, 0.0);
    f.checks.push_back({"Bel(I)", cell.dsmt_belief, 0.97234607});
    fixtures.push_back(std::move(f));
  }
  {
    Fixture f{"paradox_reassignment", 1e-12, {}};
    push_mass_checks(f.checks, "gradient", cell.readings[0].reassigned, 0.0,
                     0.05, 0.8, 0.15);
    push_mass_checks(f.checks, "texture", cell.readings[1].reassigned, 0.0,
                     0.0, 0.323, 0.677);
    push_mass_checks(f.checks, "temperature", cell.readings[2].reassigned,
                     0.0, 0.648, 0.0, 0.352);
    fixtures.push_back(std::move(f));
  }
  {
    Fixture f{"three_expert_dst", 1e-4, {}};
    push_mass_checks(f.checks, "combined", cell.dst, 0.0, 0.2296, 0.6881,
                     0.0824);
    f.checks.push_back({"Bel(I)", cell.dst_belief, 0.6881});
    fixtures.push_back(std::move(f));
  }

  bool all_pass = true;
  for (const Fixture& fixture : fixtures) {
    all_pass = report_fixture(fixture, log) && all_pass;
  }
  log << (all_pass ? "selftest: all fixtures passed\n"
                   : "selftest: FAILURES detected\n");
  return all_pass;
}

}  // namespace belmap::cli
