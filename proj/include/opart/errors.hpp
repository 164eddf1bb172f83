#pragma once

#include <stdexcept>
#include <string>

namespace opart {

// Precondition on the mathematical domain (log of a non-positive number, n = 0, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Requested size exceeds a configured limit.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Table coverage is insufficient for the requested index.
struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// An enclosure is too wide to isolate a single integer.
struct WidthError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A bound was requested below the cutoff where it is claimed.
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed cache or input file.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace opart

namespace opart {

/// What a check does when its input lies below the cutoff of the claim.
/// Enforce throws HypothesisError; Record evaluates anyway and flags the row.
enum class HypothesisPolicy { Enforce, Record };

}  // namespace opart
