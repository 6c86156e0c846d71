#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace belmap {

/// Element of the hyper-power set over the two-hypothesis frame
/// {Interesting, NotInteresting}. `Uncertain` is the union of the two
/// hypotheses (ignorance), `Paradox` their intersection (both hold at
/// once). `Empty` is a sentinel: it never carries mass.
enum class FocalElement : std::uint8_t {
  Empty = 0,
  Interesting,
  NotInteresting,
  Uncertain,
  Paradox,
};

/// Canonical iteration/display order for the four mass-bearing elements,
/// matching the usual table layout (paradox, not-interesting, interesting,
/// uncertain).
inline constexpr std::array<FocalElement, 4> kMassElements = {
    FocalElement::Paradox,
    FocalElement::NotInteresting,
    FocalElement::Interesting,
    FocalElement::Uncertain,
};

/// Free model: no exclusivity constraints, the paradox element is a real
/// focal element. Shafer model: the two hypotheses are disjoint, so the
/// intersection is empty (classical Dempster-Shafer).
enum class FrameModel : std::uint8_t { Free, Shafer };

std::string to_string(FocalElement e);
std::string to_string(FrameModel m);

/// Masses must sum to one within this tolerance.
inline constexpr double kMassSumTol = 1e-9;

/// Dempster's rule refuses to normalize when 1 - K falls at or below this.
inline constexpr double kConflictTol = 1e-12;

/// A general basic belief assignment over the four non-empty focal
/// elements. Validated at construction and immutable afterwards: the
/// components are nonnegative, sum to one within kMassSumTol, and under
/// the Shafer model the paradox component is exactly zero.
class MassAssignment {
 public:
  /// Throws NegativeMass, SumViolation or ModelViolation. Masses are
  /// checked, never renormalized.
  MassAssignment(double paradox, double not_interesting, double interesting,
                 double uncertain, FrameModel model = FrameModel::Free);

  /// Total ignorance: all mass on the uncertain element.
  static MassAssignment vacuous(FrameModel model = FrameModel::Free);

  double operator[](FocalElement e) const;  // mass(Empty) is 0 by definition
  FrameModel model() const { return model_; }

  double paradox() const { return m_[0]; }
  double not_interesting() const { return m_[1]; }
  double interesting() const { return m_[2]; }
  double uncertain() const { return m_[3]; }

 private:
  std::array<double, 4> m_;  // order of kMassElements
  FrameModel model_;
};

/// Shorthand used throughout: make_mass(p, n, i, u) takes the components
/// in table order m(I∩NI), m(NI), m(I), m(I∪NI).
inline MassAssignment make_mass(double paradox, double not_interesting,
                                double interesting, double uncertain,
                                FrameModel model = FrameModel::Free) {
  return MassAssignment(paradox, not_interesting, interesting, uncertain,
                        model);
}

/// Meet of two focal elements. In the free model no intersection of
/// non-empty elements is empty; under Shafer the two hypotheses are
/// disjoint and the paradox element collapses to Empty.
FocalElement intersect(FocalElement a, FocalElement b, FrameModel model);

/// Containment in the model's lattice. In the free model the paradox
/// element sits below both hypotheses; everything sits below Uncertain.
bool subset_of(FocalElement a, FocalElement b, FrameModel model);

/// Conjunctive combination of two sources: mass of A is the total product
/// mass of pairs whose intersection is A, using the free-model meet. Total
/// and normalization-free. Shafer inputs are accepted (they are valid
/// assignments with zero paradox mass); the result is a free-model mass.
MassAssignment fuse_dsmt(const MassAssignment& m1, const MassAssignment& m2);

/// Dempster's rule: conjunctive combination with the conflict mass K
/// (products landing on the empty set) removed by normalization. Inputs
/// must carry no paradox mass. Throws TotalConflict when 1 - K <=
/// kConflictTol and ModelViolation on paradox-carrying inputs.
MassAssignment fuse_dst(const MassAssignment& m1, const MassAssignment& m2);

enum class CombinationRule : std::uint8_t { DSmT, DST };

/// Left fold of pairwise fusion; both rules are associative and
/// commutative so the grouping is immaterial. The list must be non-empty.
MassAssignment fold_fuse(std::span<const MassAssignment> masses,
                         CombinationRule rule);

/// Bel(A): total mass of elements contained in A. Pessimistic bound.
double belief(const MassAssignment& m, FocalElement a);

/// Pl(A): total mass of elements meeting A. Optimistic bound. In the free
/// model every pair of non-empty elements meets, so Pl is identically 1.
double plausibility(const MassAssignment& m, FocalElement a);

/// Classical discounting: the fraction u of each informative component
/// (paradox, not-interesting, interesting) moves to the uncertain element.
/// Throws UncertaintyOutOfRange unless u in [0, 1].
MassAssignment discount(const MassAssignment& m, double u);

/// Reassigns the paradox mass to the uncertain element, yielding a valid
/// Shafer-model assignment. This is the bridge used before Dempster
/// fusion: a conflict of opinions is treated as a lack of information.
MassAssignment paradox_to_uncertain(const MassAssignment& m);

// --- refined frame -------------------------------------------------------
//
// The two-hypothesis free model embeds into a classical three-atom frame
// {overlap, interesting-only, not-interesting-only}: the original elements
// map to the subsets that contain the overlap atom, and on those subsets
// Dempster's rule is conflict-free and reproduces the DSmT combination.

/// Subset of the refined frame encoded as a bitmask.
enum class RefinedSubset : std::uint8_t {
  Empty = 0,
  Overlap = 1,                // I∩NI as an atom
  InterestingOnly = 2,        // I minus the overlap
  NotInterestingOnly = 4,     // NI minus the overlap
  OverlapOrInteresting = 3,   // image of I
  OverlapOrNotInteresting = 5,  // image of NI
  ExceptOverlap = 6,
  Full = 7,                   // image of I∪NI
};

std::string to_string(RefinedSubset s);

/// Basic probability assignment over the 7 non-empty subsets of the
/// refined frame. All 7 slots are stored so that inadmissible support is
/// detectable rather than unrepresentable.
class RefinedMass {
 public:
  /// `masses[k]` is the mass of the subset with bitmask k+1.
  /// Throws NegativeMass / SumViolation.
  explicit RefinedMass(const std::array<double, 7>& masses);

  static RefinedMass vacuous();

  double operator[](RefinedSubset s) const;

  /// True when mass sits only on the four subsets containing the overlap
  /// atom (the image of the embedding).
  bool admissible_support() const;

 private:
  std::array<double, 7> m_;  // index = bitmask - 1
};

/// Embedding of a free-model assignment into the refined frame:
/// paradox -> overlap atom, each hypothesis -> "its atom plus overlap",
/// uncertain -> full frame.
RefinedMass refine(const MassAssignment& m);

/// Dempster's rule on the refined frame. Inputs must have admissible
/// support (SupportViolation otherwise); on that support the conflict is
/// exactly zero, so no normalization occurs.
RefinedMass fuse_refined_dst(const RefinedMass& m1, const RefinedMass& m2);

}  // namespace belmap
