#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "belmap/evidence.hpp"

namespace belmap {

/// Base opinion of an expert before discounting: masses for the paradox,
/// not-interesting and interesting elements. Nothing goes to the uncertain
/// element at this stage; discounting moves mass there afterwards.
struct MassTriple {
  double paradox = 0.0;
  double not_interesting = 0.0;
  double interesting = 0.0;

  double sum() const { return paradox + not_interesting + interesting; }
};

/// One half-open bin [lower, upper) of an interval table. The last bin of
/// a table may be unbounded (upper = +infinity).
struct IntervalBin {
  double lower = 0.0;
  double upper = 0.0;
  MassTriple base;
};

/// Ordered, contiguous, non-overlapping bins mapping a measured value to a
/// base triple. Bins are validated at construction: ascending, touching,
/// triples normalized.
class IntervalExpertTable {
 public:
  IntervalExpertTable(std::string name, std::vector<IntervalBin> bins);

  const std::string& name() const { return name_; }
  const std::vector<IntervalBin>& bins() const { return bins_; }

  /// Triple of the unique bin containing `value`. Throws BelowDomain under
  /// the first bin, AboveDomain past a bounded last bin.
  const MassTriple& lookup(double value) const;

 private:
  std::string name_;
  std::vector<IntervalBin> bins_;
};

/// Dictionary from texture code to base triple, with a fallback triple for
/// codes not in the database. Total: every code maps to something.
class TextureExpertTable {
 public:
  TextureExpertTable(std::string name, MassTriple unknown,
                     std::map<int, MassTriple> entries);

  const std::string& name() const { return name_; }
  const MassTriple& unknown() const { return unknown_; }
  const std::map<int, MassTriple>& entries() const { return entries_; }

  const MassTriple& lookup(int code) const;

 private:
  std::string name_;
  MassTriple unknown_;
  std::map<int, MassTriple> entries_;
};

inline const MassTriple& lookup_interval(const IntervalExpertTable& table,
                                         double value) {
  return table.lookup(value);
}

inline const MassTriple& lookup_texture(const TextureExpertTable& table,
                                        int code) {
  return table.lookup(code);
}

/// Base triple plus measurement uncertainty u -> discounted free-model
/// assignment. The uncertain component of the result equals u exactly.
MassAssignment expert_assign(const MassTriple& base, double u);

/// The shipped expert tables. The gradient expert favours steep terrain,
/// the temperature expert hot areas, the texture expert catalogued
/// materials 2..4; code 0 is reserved for "not in database".
const IntervalExpertTable& default_gradient_expert();
const IntervalExpertTable& default_temperature_expert();
const TextureExpertTable& default_texture_expert();

}  // namespace belmap
