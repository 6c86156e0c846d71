#pragma once

#include <stdexcept>
#include <string>

namespace belmap {

/// Base class for all belmap errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- evidence algebra ---

/// A mass component was negative.
struct NegativeMass : Error {
  using Error::Error;
};

/// Masses do not sum to one within tolerance.
struct SumViolation : Error {
  using Error::Error;
};

/// Operation received a mass whose model forbids it (e.g. paradox mass
/// under the Shafer model).
struct ModelViolation : Error {
  using Error::Error;
};

/// Dempster normalization denominator vanished (conflict K = 1).
struct TotalConflict : Error {
  using Error::Error;
};

/// Discount factor outside [0, 1].
struct UncertaintyOutOfRange : Error {
  using Error::Error;
};

/// Refined mass carries weight outside the admissible subsets.
struct SupportViolation : Error {
  using Error::Error;
};

// --- expert tables ---

/// Measured value below the first bin of an interval table.
struct BelowDomain : Error {
  using Error::Error;
};

/// Measured value at or above the end of the last (bounded) bin.
struct AboveDomain : Error {
  using Error::Error;
};

// --- terrain / scene ---

struct GridTooSmall : Error {
  using Error::Error;
};

struct CameraOutOfBounds : Error {
  using Error::Error;
};

/// Scene or run configuration is inconsistent (bad dimensions, feature
/// outside the grid, unparsable file, ...).
struct ConfigInvalid : Error {
  using Error::Error;
};

struct RangeInvalid : Error {
  using Error::Error;
};

// --- cli / io ---

struct IoError : Error {
  using Error::Error;
};

struct CellOutOfBounds : Error {
  using Error::Error;
};

}  // namespace belmap
