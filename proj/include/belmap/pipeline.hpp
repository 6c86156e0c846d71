#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "belmap/evidence.hpp"
#include "belmap/experts.hpp"
#include "belmap/terrain.hpp"

namespace belmap {

/// DSmT fuses the expert opinions as-is, paradox mass and all.
/// DempsterReassign first moves each expert's paradox mass to the uncertain
/// element and then applies Dempster's rule — the classical-theory baseline.
enum class FusionRule : std::uint8_t { DSmT, DempsterReassign };

std::string to_string(FusionRule rule);

/// The three instrument experts used by the pipeline.
struct ExpertSet {
  IntervalExpertTable gradient;
  IntervalExpertTable temperature;
  TextureExpertTable texture;

  static ExpertSet defaults();
};

/// Everything one expert contributed at one cell.
struct ExpertReading {
  std::string expert;
  double value = 0.0;      // measured value (texture code as a double)
  double uncertainty = 0.0;
  MassTriple base;
  MassAssignment mass = MassAssignment::vacuous();        // after discounting
  MassAssignment reassigned = MassAssignment::vacuous();  // paradox moved to uncertain
};

/// Side-by-side record of one cell under both rules.
struct CellReport {
  Index x = 0;
  Index y = 0;
  std::array<ExpertReading, 3> readings;
  MassAssignment dsmt = MassAssignment::vacuous();
  MassAssignment dst = MassAssignment::vacuous(FrameModel::Shafer);
  double dsmt_belief = 0.0;
  double dsmt_plausibility = 0.0;
  double dst_belief = 0.0;
  double dst_plausibility = 0.0;
};

/// Discounted masses of the three experts at one cell, in pipeline order
/// gradient, texture, temperature. Throws on lookup domain errors.
std::array<MassAssignment, 3> cell_masses(const Scene& scene,
                                          const ExpertSet& experts, Index x,
                                          Index y);

/// Three-way fusion under the chosen rule.
MassAssignment fuse_cell(const std::array<MassAssignment, 3>& masses,
                         FusionRule rule);

struct CellDiagnostic {
  Index x = 0;
  Index y = 0;
  std::string message;
};

/// Interest map plus the cells that could not be fused.
struct InterestMap {
  GridMap belief;
  std::vector<CellDiagnostic> diagnostics;
};

/// Per-cell belief in the interesting hypothesis under the chosen rule.
/// Cells whose lookup or fusion fails score 0 and are reported in the
/// diagnostics instead of aborting the whole map.
InterestMap build_interest_map(const Scene& scene, const ExpertSet& experts,
                               FusionRule rule);

/// Full per-cell record under both rules. Throws CellOutOfBounds.
CellReport cell_report(const Scene& scene, const ExpertSet& experts, Index x,
                       Index y);

/// Report built from raw (value, uncertainty) readings instead of a scene;
/// readings are (gradient, texture code, temperature).
CellReport report_from_readings(const ExpertSet& experts, double gradient,
                                double gradient_u, int texture_code,
                                double texture_u, double temperature,
                                double temperature_u, Index x = 0, Index y = 0);

}  // namespace belmap
