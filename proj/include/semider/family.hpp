#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "semider/matrix.hpp"

namespace semider {

enum class FamilyId {
  All,
  Diag,
  Utm,
  UtToeplitz,
  Toeplitz,
  Circulant,
  Arrow,
  ZeroRows,
  ZeroCross,
  CornerEqual,
  BlockRepeat,
  Tail,
};

/// A parameterized set of n x n matrices. Every family here is "tied
/// position groups": a member carries one free coefficient per group,
/// constant across the group's positions, and is zero elsewhere. That
/// single shape covers entry-constrained sets (diagonal, triangular,
/// zero rows/crosses, tied corners) and coefficient forms (polynomials
/// in the shift matrices, Toeplitz diagonals, circulants).
///
/// Coefficient vectors are 0-based in group order. Row/column index sets
/// taken from spec strings are 1-based (zero-rows:1 zeroes the first
/// row) and converted on parse.
class Family {
 public:
  using Group = std::vector<std::pair<int, int>>;

  static Family all(int n);
  static Family diag(int n);
  static Family utm(int n);
  static Family ut_toeplitz(int n);  // a0 E + a1 D + ... + a_{n-1} D^{n-1}
  static Family toeplitz(int n);     // coeffs ordered by offset -(n-1)..(n-1)
  static Family circulant(int n);    // c0 E + c1 d + ... + c_{n-1} d^{n-1}
  static Family arrow(int n);        // free diagonal plus the (0, n-1) corner
  static Family zero_rows(int n, std::vector<int> rows);   // 0-based rows forced to zero
  static Family zero_cross(int n, std::vector<int> idx);   // rows and columns forced to zero
  static Family corner_equal(int n);  // upper triangular with a00 = a_{n-1,n-1}
  static Family block_repeat(int n);  // upper triangular, leading 2x2 block echoed at the tail
  static Family tail(int n, int k);   // a0 E + a_{n-k} D^{n-k} + ... + a_{n-1} D^{n-1}

  FamilyId id() const { return id_; }
  int n() const { return n_; }
  int tail_k() const { return k_; }
  const std::vector<int>& index_set() const { return indices_; }  // 0-based
  const std::string& spec_string() const { return spec_; }
  const std::vector<Group>& groups() const { return groups_; }
  std::size_t param_count() const { return groups_.size(); }

  bool is_member(const Matrix& A) const;
  Matrix from_coeffs(const SemiringPtr& sr, const std::vector<Value>& coeffs) const;
  std::vector<Value> extract_coeffs(const Matrix& A) const;  // MembershipError if outside

  /// All members with coefficients drawn from `universe`, in odometer
  /// order over the groups. BudgetError when the count would exceed
  /// max_objects.
  std::vector<Matrix> enumerate(const SemiringPtr& sr, const std::vector<Value>& universe,
                                std::uint64_t max_objects) const;
  /// Finite carriers only: universe = the whole carrier.
  std::vector<Matrix> enumerate(const SemiringPtr& sr,
                                std::uint64_t max_objects = 1u << 20) const;

  Matrix sample(const SemiringPtr& sr, Rng& rng, const SampleBounds& bounds) const;

 private:
  Family(FamilyId id, int n, std::string spec, std::vector<Group> groups);

  FamilyId id_;
  int n_;
  int k_ = 0;
  std::vector<int> indices_;
  std::string spec_;
  std::vector<Group> groups_;
  std::vector<int> cover_;  // position -> group index, -1 when forced zero
};

/// Spec strings: all | diag | utm | ut-toeplitz | toeplitz | circulant |
/// arrow | zero-rows:<list> | zero-cross:<list> | corner-equal |
/// block-repeat | tail:<k>   (lists are 1-based, comma separated).
Family parse_family(const std::string& spec, int n);

/// Closure of the family under matrix addition and multiplication, plus
/// membership of the zero matrix. Toeplitz is genuinely not closed under
/// multiplication; the report says so with a witness.
VerificationReport closure_check(const Family& fam, const SemiringPtr& sr,
                                 std::uint64_t max_objects = 1u << 20,
                                 const std::vector<Value>* universe = nullptr);

}  // namespace semider
