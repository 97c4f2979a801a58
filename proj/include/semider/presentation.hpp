#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semider/family.hpp"

namespace semider {

/// A finite semiring given by element names and full operation tables.
/// Capped at 64 elements so subsets travel as one-word bitmasks; every
/// ideal / unit / center question below is a finite table walk.
struct Presentation {
  using Mask = std::uint64_t;

  std::string name;
  std::vector<std::string> names;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  int zero = 0;
  int one = 0;

  int size() const { return static_cast<int>(names.size()); }
  Mask full_mask() const { return size() == 64 ? ~0ull : (1ull << size()) - 1; }
  static bool in(Mask m, int i) { return (m >> i) & 1u; }

  /// Plain (two-sided) ideal: contains zero, closed under addition,
  /// absorbs the whole semiring under multiplication on either side.
  bool is_ideal(Mask I) const;
  /// Subtractive condition alone: a in I and a + b in I force b in I.
  bool is_subtractive(Mask I) const;
  /// Least ideal containing gens; with subtractive = true, the least
  /// subtractive ideal.
  Mask ideal_closure(Mask gens, bool subtractive) const;
  /// Every ideal, as the join closure of the principal ideals. An ideal
  /// is the join of the principal ideals of its elements, so the list is
  /// complete. Sorted, deduplicated.
  std::vector<Mask> all_ideals(bool subtractive) const;
  /// Proper, and extending by any outside element generates everything.
  bool is_maximal_ideal(Mask I, bool subtractive) const;

  std::vector<int> units() const;  // two-sided inverses against `one`
  /// True when some u in us generates all of us by powers; writes it.
  bool units_cyclic(const std::vector<int>& us, int* generator) const;
  std::vector<int> center() const;
  bool is_idempotent_elem(int i) const { return mul[i][i] == i; }
  bool is_nilpotent_elem(int i, int max_power) const;

  nlohmann::json mask_to_json(Mask I) const;  // element names, index order
};

/// A matrix family over the Booleans, closed under + and *, presented as
/// a finite semiring. Element order is the coefficient-mask odometer
/// (bit g of the index = coefficient of group g), so indices, names and
/// tables are stable across runs.
struct PatternSemiring {
  Family family;
  std::vector<Matrix> elements;
  Presentation pres;

  int index_of(const Matrix& m) const;  // ParseError when m is not an element
};

/// Builds the presentation; throws CapabilityError past 64 elements and
/// reports a witness if the family fails to be closed (e.g. toeplitz).
PatternSemiring pattern_semiring(const Family& fam);

/// Same construction over an arbitrary finite carrier: element index is
/// the little-endian mixed-radix coefficient tuple (carrier elements in
/// enumeration order), names are coefficient-scaled basis sums. Over the
/// Booleans this coincides with pattern_semiring element for element.
PatternSemiring family_presentation(const Family& fam, const SemiringPtr& sr);

/// The inner-derivation semiring of a pattern family: element i is the
/// self-map A -> A * X_i, addition is pointwise, multiplication is
/// composition. Built from the maps themselves; `iso` then verifies that
/// X -> delta[X] is a bijection matching both tables, rather than
/// assuming it.
struct DerivationSemiring {
  PatternSemiring base;
  Presentation pres;        // names delta[<element>]
  VerificationReport iso;   // checks: bijective, preserves-add, preserves-mul
};

DerivationSemiring derivation_semiring(const Family& fam);

/// Members of `search` commuting with M, in enumeration order.
std::vector<Matrix> commutant(const Matrix& M, const Family& search,
                              std::uint64_t max_objects = 1u << 20,
                              const std::vector<Value>* universe = nullptr);

}  // namespace semider
