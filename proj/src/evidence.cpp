#include "belmap/evidence.hpp"

#include <cmath>
#include <fmt/format.h>

#include "belmap/errors.hpp"

namespace belmap {

namespace {

int mass_index(FocalElement e) {
  switch (e) {
    case FocalElement::Paradox:
      return 0;
    case FocalElement::NotInteresting:
      return 1;
    case FocalElement::Interesting:
      return 2;
    case FocalElement::Uncertain:
      return 3;
    case FocalElement::Empty:
      return -1;
  }
  return -1;
}

}  // namespace

std::string to_string(FocalElement e) {
  switch (e) {
    case FocalElement::Empty:
      return "empty";
    case FocalElement::Interesting:
      return "interesting";
    case FocalElement::NotInteresting:
      return "not_interesting";
    case FocalElement::Uncertain:
      return "uncertain";
    case FocalElement::Paradox:
      return "paradox";
  }
  return "?";
}

std::string to_string(FrameModel m) {
  return m == FrameModel::Free ? "free" : "shafer";
}

MassAssignment::MassAssignment(double paradox, double not_interesting,
                               double interesting, double uncertain,
                               FrameModel model)
    : m_{paradox, not_interesting, interesting, uncertain}, model_(model) {
  for (FocalElement e : kMassElements) {
    const double v = m_[mass_index(e)];
    if (!(v >= 0.0)) {  // catches NaN as well
      throw NegativeMass(
          fmt::format("mass of {} is {}, must be >= 0", to_string(e), v));
    }
  }
  const double sum = paradox + not_interesting + interesting + uncertain;
  if (std::abs(sum - 1.0) > kMassSumTol) {
    throw SumViolation(fmt::format("masses sum to {}, expected 1", sum));
  }
  if (model_ == FrameModel::Shafer && paradox > 0.0) {
    throw ModelViolation(fmt::format(
        "paradox mass {} is not representable under the Shafer model",
        paradox));
  }
}

MassAssignment MassAssignment::vacuous(FrameModel model) {
  return MassAssignment(0.0, 0.0, 0.0, 1.0, model);
}

double MassAssignment::operator[](FocalElement e) const {
  const int i = mass_index(e);
  return i < 0 ? 0.0 : m_[i];
}

FocalElement intersect(FocalElement a, FocalElement b, FrameModel model) {
  if (a == FocalElement::Empty || b == FocalElement::Empty) {
    return FocalElement::Empty;
  }
  if (model == FrameModel::Shafer) {
    // The paradox element is the empty set once the hypotheses are disjoint.
    if (a == FocalElement::Paradox || b == FocalElement::Paradox) {
      return FocalElement::Empty;
    }
    if (a == FocalElement::Uncertain) return b;
    if (b == FocalElement::Uncertain) return a;
    if (a == b) return a;
    return FocalElement::Empty;
  }
  if (a == FocalElement::Paradox || b == FocalElement::Paradox) {
    return FocalElement::Paradox;
  }
  if (a == FocalElement::Uncertain) return b;
  if (b == FocalElement::Uncertain) return a;
  if (a == b) return a;
  // Distinct hypotheses meet in the paradox element.
  return FocalElement::Paradox;
}

bool subset_of(FocalElement a, FocalElement b, FrameModel model) {
  if (a == FocalElement::Empty) return true;
  if (b == FocalElement::Empty) {
    return model == FrameModel::Shafer && a == FocalElement::Paradox;
  }
  if (model == FrameModel::Shafer && a == FocalElement::Paradox) {
    return true;  // empty set is contained in everything
  }
  if (a == b) return true;
  if (b == FocalElement::Uncertain) return true;
  if (model == FrameModel::Free && a == FocalElement::Paradox) {
    return true;  // the overlap sits below both hypotheses
  }
  return false;
}

MassAssignment fuse_dsmt(const MassAssignment& m1, const MassAssignment& m2) {
  std::array<double, 4> acc{0.0, 0.0, 0.0, 0.0};
  for (FocalElement b : kMassElements) {
    for (FocalElement c : kMassElements) {
      const FocalElement a = intersect(b, c, FrameModel::Free);
      acc[mass_index(a)] += m1[b] * m2[c];
    }
  }
  return MassAssignment(acc[0], acc[1], acc[2], acc[3], FrameModel::Free);
}

MassAssignment fuse_dst(const MassAssignment& m1, const MassAssignment& m2) {
  if (m1.paradox() > 0.0 || m2.paradox() > 0.0) {
    throw ModelViolation("Dempster fusion requires paradox-free inputs");
  }
  std::array<double, 4> acc{0.0, 0.0, 0.0, 0.0};
  double conflict = 0.0;
  for (FocalElement b : kMassElements) {
    for (FocalElement c : kMassElements) {
      const FocalElement a = intersect(b, c, FrameModel::Shafer);
      if (a == FocalElement::Empty) {
        conflict += m1[b] * m2[c];
      } else {
        acc[mass_index(a)] += m1[b] * m2[c];
      }
    }
  }
  const double denom = 1.0 - conflict;
  if (denom <= kConflictTol) {
    throw TotalConflict(
        fmt::format("sources are in total conflict (K = {})", conflict));
  }
  return MassAssignment(0.0, acc[1] / denom, acc[2] / denom, acc[3] / denom,
                        FrameModel::Shafer);
}

MassAssignment fold_fuse(std::span<const MassAssignment> masses,
                         CombinationRule rule) {
  if (masses.empty()) {
    throw Error("fold_fuse: empty list of masses");
  }
  MassAssignment out = masses[0];
  for (std::size_t i = 1; i < masses.size(); ++i) {
    out = rule == CombinationRule::DSmT ? fuse_dsmt(out, masses[i])
                                        : fuse_dst(out, masses[i]);
  }
  return out;
}

double belief(const MassAssignment& m, FocalElement a) {
  double sum = 0.0;
  for (FocalElement b : kMassElements) {
    if (subset_of(b, a, m.model())) sum += m[b];
  }
  return sum;
}

double plausibility(const MassAssignment& m, FocalElement a) {
  double sum = 0.0;
  for (FocalElement b : kMassElements) {
    if (intersect(b, a, m.model()) != FocalElement::Empty) sum += m[b];
  }
  return sum;
}

MassAssignment discount(const MassAssignment& m, double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw UncertaintyOutOfRange(
        fmt::format("discount factor {} outside [0, 1]", u));
  }
  const double keep = 1.0 - u;
  const double moved =
      (m.paradox() + m.not_interesting() + m.interesting()) * u;
  return MassAssignment(m.paradox() * keep, m.not_interesting() * keep,
                        m.interesting() * keep, m.uncertain() + moved,
                        m.model());
}

MassAssignment paradox_to_uncertain(const MassAssignment& m) {
  return MassAssignment(0.0, m.not_interesting(), m.interesting(),
                        m.uncertain() + m.paradox(), FrameModel::Shafer);
}

// --- refined frame -------------------------------------------------------

namespace {

constexpr std::array<RefinedSubset, 7> kRefinedSubsets = {
    RefinedSubset::Overlap,
    RefinedSubset::InterestingOnly,
    RefinedSubset::OverlapOrInteresting,
    RefinedSubset::NotInterestingOnly,
    RefinedSubset::OverlapOrNotInteresting,
    RefinedSubset::ExceptOverlap,
    RefinedSubset::Full,
};

int subset_index(RefinedSubset s) {
  return static_cast<int>(s) - 1;
}

bool contains_overlap(RefinedSubset s) {
  return (static_cast<int>(s) & static_cast<int>(RefinedSubset::Overlap)) != 0;
}

}  // namespace

std::string to_string(RefinedSubset s) {
  switch (s) {
    case RefinedSubset::Empty:
      return "{}";
    case RefinedSubset::Overlap:
      return "{overlap}";
    case RefinedSubset::InterestingOnly:
      return "{interesting-only}";
    case RefinedSubset::NotInterestingOnly:
      return "{not-interesting-only}";
    case RefinedSubset::OverlapOrInteresting:
      return "{overlap, interesting-only}";
    case RefinedSubset::OverlapOrNotInteresting:
      return "{overlap, not-interesting-only}";
    case RefinedSubset::ExceptOverlap:
      return "{interesting-only, not-interesting-only}";
    case RefinedSubset::Full:
      return "{overlap, interesting-only, not-interesting-only}";
  }
  return "?";
}

RefinedMass::RefinedMass(const std::array<double, 7>& masses) : m_(masses) {
  double sum = 0.0;
  for (RefinedSubset s : kRefinedSubsets) {
    const double v = m_[subset_index(s)];
    if (!(v >= 0.0)) {
      throw NegativeMass(
          fmt::format("mass of {} is {}, must be >= 0", to_string(s), v));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kMassSumTol) {
    throw SumViolation(
        fmt::format("refined masses sum to {}, expected 1", sum));
  }
}

RefinedMass RefinedMass::vacuous() {
  std::array<double, 7> m{};
  m[subset_index(RefinedSubset::Full)] = 1.0;
  return RefinedMass(m);
}

double RefinedMass::operator[](RefinedSubset s) const {
  return s == RefinedSubset::Empty ? 0.0 : m_[subset_index(s)];
}

bool RefinedMass::admissible_support() const {
  for (RefinedSubset s : kRefinedSubsets) {
    if (!contains_overlap(s) && m_[subset_index(s)] != 0.0) return false;
  }
  return true;
}

RefinedMass refine(const MassAssignment& m) {
  std::array<double, 7> out{};
  out[subset_index(RefinedSubset::Overlap)] = m.paradox();
  out[subset_index(RefinedSubset::OverlapOrInteresting)] = m.interesting();
  out[subset_index(RefinedSubset::OverlapOrNotInteresting)] =
      m.not_interesting();
  out[subset_index(RefinedSubset::Full)] = m.uncertain();
  return RefinedMass(out);
}

RefinedMass fuse_refined_dst(const RefinedMass& m1, const RefinedMass& m2) {
  if (!m1.admissible_support() || !m2.admissible_support()) {
    throw SupportViolation(
        "refined fusion requires mass only on subsets containing the overlap "
        "atom");
  }
  // Every admissible pair meets in a subset that again contains the overlap
  // atom, so the conflict term of Dempster's rule is identically zero.
  std::array<double, 7> acc{};
  for (RefinedSubset b : kRefinedSubsets) {
    for (RefinedSubset c : kRefinedSubsets) {
      const double p = m1[b] * m2[c];
      if (p == 0.0) continue;
      const int meet = static_cast<int>(b) & static_cast<int>(c);
      acc[meet - 1] += p;
    }
  }
  return RefinedMass(acc);
}

}  // namespace belmap
