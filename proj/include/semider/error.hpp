#pragma once

#include <stdexcept>
#include <string>

namespace semider {

struct SemiderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested operation needs a capability the carrier does not have
/// (enumerating an infinite semiring, an identity derivation without
/// additive idempotency, ...).
struct CapabilityError : SemiderError { using SemiderError::SemiderError; };
struct DimensionError : SemiderError { using SemiderError::SemiderError; };
struct CarrierMismatchError : SemiderError { using SemiderError::SemiderError; };
struct BudgetError : SemiderError { using SemiderError::SemiderError; };
struct MembershipError : SemiderError { using SemiderError::SemiderError; };
struct ParseError : SemiderError { using SemiderError::SemiderError; };
struct OverflowError : SemiderError { using SemiderError::SemiderError; };

}  // namespace semider
