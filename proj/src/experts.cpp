#include "belmap/experts.hpp"

#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <utility>

#include "belmap/errors.hpp"

namespace belmap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_triple(const std::string& table, const MassTriple& t,
                  const std::string& where) {
  // Negated comparisons so NaN entries are rejected too.
  if (!(t.paradox >= 0.0) || !(t.not_interesting >= 0.0) ||
      !(t.interesting >= 0.0)) {
    throw NegativeMass(
        fmt::format("table '{}', {}: negative base mass", table, where));
  }
  if (!(std::abs(t.sum() - 1.0) <= kMassSumTol)) {
    throw SumViolation(fmt::format(
        "table '{}', {}: base triple sums to {}, expected 1", table, where,
        t.sum()));
  }
}

}  // namespace

IntervalExpertTable::IntervalExpertTable(std::string name,
                                         std::vector<IntervalBin> bins)
    : name_(std::move(name)), bins_(std::move(bins)) {
  if (bins_.empty()) {
    throw ConfigInvalid(fmt::format("table '{}' has no bins", name_));
  }
  for (std::size_t i = 0; i < bins_.size(); ++i) {
    const IntervalBin& bin = bins_[i];
    if (!(bin.lower < bin.upper)) {
      throw ConfigInvalid(fmt::format("table '{}', bin {}: empty interval",
                                      name_, i));
    }
    if (i + 1 < bins_.size() && bins_[i + 1].lower != bin.upper) {
      throw ConfigInvalid(fmt::format(
          "table '{}': gap or overlap between bins {} and {}", name_, i,
          i + 1));
    }
    check_triple(name_, bin.base, fmt::format("bin {}", i));
  }
}

const MassTriple& IntervalExpertTable::lookup(double value) const {
  if (value < bins_.front().lower) {
    throw BelowDomain(fmt::format(
        "table '{}': value {} below the first bin (starts at {})", name_,
        value, bins_.front().lower));
  }
  for (const IntervalBin& bin : bins_) {
    if (value < bin.upper) return bin.base;
  }
  throw AboveDomain(fmt::format(
      "table '{}': value {} at or above the last bin (ends at {})", name_,
      value, bins_.back().upper));
}

TextureExpertTable::TextureExpertTable(std::string name, MassTriple unknown,
                                       std::map<int, MassTriple> entries)
    : name_(std::move(name)),
      unknown_(unknown),
      entries_(std::move(entries)) {
  check_triple(name_, unknown_, "unknown-code entry");
  for (const auto& [code, triple] : entries_) {
    check_triple(name_, triple, fmt::format("code {}", code));
  }
}

const MassTriple& TextureExpertTable::lookup(int code) const {
  const auto it = entries_.find(code);
  return it == entries_.end() ? unknown_ : it->second;
}

MassAssignment expert_assign(const MassTriple& base, double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw UncertaintyOutOfRange(
        fmt::format("uncertainty {} outside [0, 1]", u));
  }
  // Same as discounting the triple, but keeps the uncertain component
  // exactly u.
  const double keep = 1.0 - u;
  return MassAssignment(base.paradox * keep, base.not_interesting * keep,
                        base.interesting * keep, u, FrameModel::Free);
}

const IntervalExpertTable& default_gradient_expert() {
  static const IntervalExpertTable table(
      "dem_gradient",
      {
          {0.0, 1.0, {0.20, 0.80, 0.0}},
          {1.0, 3.0, {0.30, 0.60, 0.10}},
          {3.0, 5.0, {0.10, 0.10, 0.80}},
          {5.0, 7.0, {0.15, 0.05, 0.80}},
          {7.0, 9.0, {0.05, 0.05, 0.90}},
          {9.0, kInf, {0.05, 0.0, 0.95}},
      });
  return table;
}

const IntervalExpertTable& default_temperature_expert() {
  static const IntervalExpertTable table(
      "temperature",
      {
          {0.0, 20.0, {0.20, 0.80, 0.0}},
          {20.0, 40.0, {0.40, 0.50, 0.10}},
          {40.0, 60.0, {0.05, 0.0, 0.95}},
          {60.0, 80.0, {0.15, 0.05, 0.80}},
          {80.0, 100.0, {0.05, 0.05, 0.90}},
      });
  return table;
}

const TextureExpertTable& default_texture_expert() {
  static const TextureExpertTable table("texture", {0.20, 0.80, 0.0},
                                        {
                                            {1, {0.30, 0.60, 0.10}},
                                            {2, {0.10, 0.10, 0.80}},
                                            {3, {0.15, 0.05, 0.80}},
                                            {4, {0.05, 0.0, 0.95}},
                                        });
  return table;
}

}  // namespace belmap
