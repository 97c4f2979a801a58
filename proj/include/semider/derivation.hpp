#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semider/family.hpp"

namespace semider {

using MatrixMap = std::function<Matrix(const Matrix&)>;

/// A self-map of a matrix family together with the capability class on
/// which its derivation laws are claimed. Constructions that lean on
/// a + a = a (inner maps, diagonal stripping, row keeps that cross the
/// diagonal) set requires_additively_idempotent; verify_derivation
/// surfaces a carrier mismatch as its own precondition finding, distinct
/// from any Leibniz failure it goes on to discover.
struct Derivation {
  std::string name;
  std::string construction;
  Family family;
  bool requires_additively_idempotent = false;
  MatrixMap map;

  Matrix apply(const Matrix& A) const;  // MembershipError when A is outside the family
};

/// Entrywise lift of a base-carrier derivation to all n x n matrices.
Derivation make_hereditary(const BaseDerivation& base, int n);

struct InnerOptions {
  std::uint64_t max_objects = 1u << 20;
  std::uint64_t samples = 200;
  std::uint64_t seed = 0;
  SampleBounds bounds;
};

/// A |-> A X for a central X: requires an additively idempotent carrier
/// and checks X against every family member (sampled when infinite).
Derivation make_inner(const Family& fam, const Matrix& X, const InnerOptions& opts = {});
Derivation make_inner(const Family& fam, const PatternMatrix& X, const SemiringPtr& check_over,
                      const InnerOptions& opts = {});

// Catalog. Families are fixed by construction; index sets are 0-based.
Derivation builtin_example1(int n);                                 // arrow: keep the corner
Derivation builtin_example2(int n, std::vector<int> rows);          // zero rows: keep kept-row entries in zeroed columns
Derivation builtin_example3(int n, std::vector<int> idx, const PatternMatrix& Y);
Derivation builtin_strip_diag(const Family& fam);                   // example4 on utm or ut-toeplitz
Derivation builtin_delta1(int n);                                   // example5: keep all of row 0
Derivation builtin_delta2(int n);                                   // example5: keep row 0 right of the diagonal
Derivation builtin_example6(int n);                                 // corner-equal: a00 to the corner
Derivation builtin_example7(int n);                                 // block-repeat: leading block to the tail
Derivation builtin_prop4_tail(int n, int k);                        // tail: drop the scalar part

/// Non-derivation foils for the counterexample finder.
/// Keep row-0 entries from column `col0` (0-based) on; a derivation on
/// the upper triangulars only when col0 <= 1.
MatrixMap phi_row_keep_from(int col0);
/// On the upper triangular Toeplitz family, keep the D^i coefficients
/// with i >= from only.
MatrixMap phi_ut_coeff_keep_from(const Family& ut_toeplitz, int from);

struct VerifyOptions {
  enum class Mode { Exhaustive, Sampled };
  Mode mode = Mode::Exhaustive;
  std::uint64_t samples = 500;
  std::uint64_t seed = 0;
  SampleBounds bounds;
  std::uint64_t max_objects = 1u << 20;
  std::size_t max_witnesses = 8;
  /// Optional coefficient universe for exhaustive runs over infinite
  /// carriers (e.g. naturals up to a bound).
  std::optional<std::vector<Value>> universe;
};

/// Additivity, Leibniz, the scalar law d(aA) = d(aE) A + a d(A) on
/// scalars whose aE lies in the family, and family closure of the map.
VerificationReport verify_derivation(const Derivation& d, const SemiringPtr& sr,
                                     const VerifyOptions& opts = {});

struct Classification {
  enum class Kind { Idempotent, Nilpotent, Neither, Inconclusive };
  Kind kind = Kind::Inconclusive;
  int index = 0;  // nilpotency index when kind == Nilpotent
  std::uint64_t cases = 0;
  std::string mode;
  nlohmann::json to_json() const;
};

/// Compose the map with itself up to max_power (default n+1) over all
/// (or sampled) members. Nilpotent wins over idempotent for the zero map.
Classification classify(const Derivation& d, const SemiringPtr& sr, const VerifyOptions& opts = {},
                        int max_power = -1);

/// First Leibniz violation of an arbitrary self-map over the family, in
/// deterministic enumeration order; nullopt when none is found.
std::optional<nlohmann::json> find_leibniz_counterexample(const MatrixMap& map, const Family& fam,
                                                          const SemiringPtr& sr,
                                                          const VerifyOptions& opts = {});

/// Spec strings: hereditary:<polyderiv|identity> | inner:<bits-json> |
/// example1..example7 (5 needs a .delta1/.delta2 suffix) |
/// example5.delta1 | example5.delta2 | strip-diag | prop4:k=<k>.
Derivation parse_derivation(const std::string& spec, const Family& fam, const SemiringPtr& sr);

/// Family spec the given derivation spec lives on when the user names
/// none (example1 -> arrow, prop4:k=2 -> tail:2, ...).
std::string default_family_spec(const std::string& derivation_spec);

}  // namespace semider
