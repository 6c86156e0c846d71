#include "belmap/pipeline.hpp"

#include <fmt/format.h>

#include "belmap/errors.hpp"

namespace belmap {

std::string to_string(FusionRule rule) {
  return rule == FusionRule::DSmT ? "dsmt" : "dst";
}

ExpertSet ExpertSet::defaults() {
  return ExpertSet{default_gradient_expert(), default_temperature_expert(),
                   default_texture_expert()};
}

std::array<MassAssignment, 3> cell_masses(const Scene& scene,
                                          const ExpertSet& experts, Index x,
                                          Index y) {
  if (!scene.dem.contains(x, y)) {
    throw CellOutOfBounds(fmt::format("cell ({}, {}) outside the grid", x, y));
  }
  const double gradient = gradient_at(scene.dem, x, y);
  const MassAssignment from_gradient = expert_assign(
      experts.gradient.lookup(gradient), scene.dem_uncertainty(x, y));
  const MassAssignment from_texture = expert_assign(
      experts.texture.lookup(scene.texture(x, y)),
      scene.texture_uncertainty(x, y));
  const MassAssignment from_temperature = expert_assign(
      experts.temperature.lookup(scene.temperature(x, y)),
      scene.temperature_uncertainty(x, y));
  return {from_gradient, from_texture, from_temperature};
}

MassAssignment fuse_cell(const std::array<MassAssignment, 3>& masses,
                         FusionRule rule) {
  if (rule == FusionRule::DSmT) {
    return fold_fuse(masses, CombinationRule::DSmT);
  }
  const std::array<MassAssignment, 3> reassigned = {
      paradox_to_uncertain(masses[0]),
      paradox_to_uncertain(masses[1]),
      paradox_to_uncertain(masses[2]),
  };
  return fold_fuse(reassigned, CombinationRule::DST);
}

InterestMap build_interest_map(const Scene& scene, const ExpertSet& experts,
                               FusionRule rule) {
  InterestMap out{GridMap(scene.dem.width(), scene.dem.height()), {}};
  for (Index y = 0; y < scene.dem.height(); ++y) {
    for (Index x = 0; x < scene.dem.width(); ++x) {
      try {
        const MassAssignment fused =
            fuse_cell(cell_masses(scene, experts, x, y), rule);
        out.belief(x, y) = belief(fused, FocalElement::Interesting);
      } catch (const Error& e) {
        out.belief(x, y) = 0.0;
        out.diagnostics.push_back({x, y, e.what()});
      }
    }
  }
  return out;
}

namespace {

CellReport assemble_report(std::array<ExpertReading, 3> readings, Index x,
                           Index y) {
  CellReport report;
  report.x = x;
  report.y = y;
  const std::array<MassAssignment, 3> masses = {
      readings[0].mass, readings[1].mass, readings[2].mass};
  for (ExpertReading& r : readings) {
    r.reassigned = paradox_to_uncertain(r.mass);
  }
  report.readings = std::move(readings);
  report.dsmt = fuse_cell(masses, FusionRule::DSmT);
  report.dst = fuse_cell(masses, FusionRule::DempsterReassign);
  report.dsmt_belief = belief(report.dsmt, FocalElement::Interesting);
  report.dsmt_plausibility =
      plausibility(report.dsmt, FocalElement::Interesting);
  report.dst_belief = belief(report.dst, FocalElement::Interesting);
  report.dst_plausibility = plausibility(report.dst, FocalElement::Interesting);
  return report;
}

ExpertReading make_reading(std::string name, double value, double u,
                           const MassTriple& base) {
  ExpertReading r;
  r.expert = std::move(name);
  r.value = value;
  r.uncertainty = u;
  r.base = base;
  r.mass = expert_assign(base, u);
  return r;
}

}  // namespace

CellReport cell_report(const Scene& scene, const ExpertSet& experts, Index x,
                       Index y) {
  if (!scene.dem.contains(x, y)) {
    throw CellOutOfBounds(fmt::format("cell ({}, {}) outside the grid", x, y));
  }
  const double gradient = gradient_at(scene.dem, x, y);
  const int code = scene.texture(x, y);
  const double temperature = scene.temperature(x, y);
  return assemble_report(
      {
          make_reading(experts.gradient.name(), gradient,
                       scene.dem_uncertainty(x, y),
                       experts.gradient.lookup(gradient)),
          make_reading(experts.texture.name(), static_cast<double>(code),
                       scene.texture_uncertainty(x, y),
                       experts.texture.lookup(code)),
          make_reading(experts.temperature.name(), temperature,
                       scene.temperature_uncertainty(x, y),
                       experts.temperature.lookup(temperature)),
      },
      x, y);
}

CellReport report_from_readings(const ExpertSet& experts, double gradient,
                                double gradient_u, int texture_code,
                                double texture_u, double temperature,
                                double temperature_u, Index x, Index y) {
  return assemble_report(
      {
          make_reading(experts.gradient.name(), gradient, gradient_u,
                       experts.gradient.lookup(gradient)),
          make_reading(experts.texture.name(),
                       static_cast<double>(texture_code), texture_u,
                       experts.texture.lookup(texture_code)),
          make_reading(experts.temperature.name(), temperature, temperature_u,
                       experts.temperature.lookup(temperature)),
      },
      x, y);
}

}  // namespace belmap
