#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "semider/report.hpp"
#include "semider/rng.hpp"
#include "semider/value.hpp"

namespace semider {

struct SemiringFlags {
  bool additively_idempotent = false;
  bool commutative = false;
  bool finite = false;
};

/// A named carrier with exact add/mul, distinguished 0 and 1, decidable
/// equality, and declared capability flags. Flags are promises that
/// check_semiring_axioms validates against behaviour; a mismatch is an
/// error in its own right, never a silent downgrade.
class Semiring {
 public:
  virtual ~Semiring() = default;

  virtual const std::string& name() const = 0;
  virtual SemiringFlags flags() const = 0;
  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value mul(const Value& a, const Value& b) const = 0;
  virtual Value zero() const = 0;
  virtual Value one() const = 0;
  virtual bool contains(const Value& v) const = 0;

  /// Complete duplicate-free element list; CapabilityError unless finite.
  virtual std::vector<Value> elements() const;

  virtual Value sample(Rng& rng, const SampleBounds& bounds) const = 0;

  /// JSON image of one carrier element (minus-infinity is null,
  /// polynomials are little-endian coefficient arrays).
  virtual nlohmann::json value_to_json(const Value& v) const;
  virtual Value value_from_json(const nlohmann::json& j) const;

  bool eq(const Value& a, const Value& b) const { return a == b; }
  bool is_zero(const Value& v) const { return v == zero(); }
};

using SemiringPtr = std::shared_ptr<const Semiring>;

SemiringPtr make_bool();
SemiringPtr make_chain(Int m);  // {0..m}, add = max, mul = min, one = m
SemiringPtr make_maxplus_int();
SemiringPtr make_nat();
SemiringPtr make_natpoly();

/// Arbitrary descriptor; lets tests model deliberately broken flag sets.
SemiringPtr make_custom(std::string name, SemiringFlags flags,
                        std::function<Value(const Value&, const Value&)> add,
                        std::function<Value(const Value&, const Value&)> mul,
                        Value zero_elem, Value one_elem,
                        std::optional<std::vector<Value>> element_list,
                        std::function<Value(Rng&, const SampleBounds&)> sample_fn);

/// Spec strings: bool | chain:<m> | maxplus-int | nat | natpoly.
SemiringPtr parse_semiring(const std::string& spec);

std::vector<Value> enumerate_elements(const SemiringPtr& sr);

/// Finite carriers: the full element list. Infinite carriers: the
/// bounded grid the samplers draw from (integers clipped to max_int,
/// polynomials to max_poly_degree / max_poly_coeff). Sorted, distinct.
std::vector<Value> enumeration_universe(const SemiringPtr& sr, const SampleBounds& bounds,
                                        std::uint64_t max_objects);

struct AxiomBudget {
  enum class Mode { Exhaustive, Sampled };
  Mode mode = Mode::Exhaustive;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  SampleBounds bounds;
};

/// Checks the semiring laws (associativity, commutativity of +, neutral
/// elements, two-sided distributivity, annihilating zero), validates the
/// declared flags, and checks zero-sum-freeness on additively idempotent
/// carriers. Exhaustive over all triples when finite, sampled otherwise.
VerificationReport check_semiring_axioms(const SemiringPtr& sr, const AxiomBudget& budget);

/// Scalar derivation of a base carrier; matrix code lifts it entrywise.
struct BaseDerivation {
  std::string name;
  SemiringPtr domain;
  std::function<Value(const Value&)> map;
};

BaseDerivation poly_derivative_base();

/// The identity map, a derivation exactly on additively idempotent
/// carriers (a = a + a makes Leibniz collapse). CapabilityError with the
/// a = b = 1 witness otherwise.
BaseDerivation identity_base_derivation(const SemiringPtr& sr);

VerificationReport verify_base_derivation(const BaseDerivation& d, const AxiomBudget& budget);

}  // namespace semider
