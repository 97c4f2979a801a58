#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "semider/semiring.hpp"

namespace semider {

/// Dense square matrix over a carrier. Value semantics; every operation
/// checks dimension and carrier agreement. Indexing is 0-based.
class Matrix {
 public:
  Matrix(SemiringPtr sr, int n);

  static Matrix zero(SemiringPtr sr, int n) { return Matrix(std::move(sr), n); }
  static Matrix identity(SemiringPtr sr, int n);
  static Matrix unit(SemiringPtr sr, int n, int i, int j);  // E_ij

  int n() const { return n_; }
  const SemiringPtr& semiring() const { return sr_; }

  const Value& at(int i, int j) const { return entries_[idx(i, j)]; }
  void set(int i, int j, Value v) { entries_[idx(i, j)] = std::move(v); }

  Matrix operator+(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool operator<(const Matrix& o) const;  // total order for set comparisons

  bool is_zero() const;
  std::string str() const;

  nlohmann::json entries_json() const;
  nlohmann::json to_json() const;  // {"semiring":..., "n":..., "entries":...}

  /// Parse {"semiring","n","entries"}; carrier may be forced by the
  /// caller. Every entry is validated against the carrier.
  static Matrix from_json(const nlohmann::json& j, SemiringPtr force_carrier = nullptr);

 private:
  std::size_t idx(int i, int j) const;
  SemiringPtr sr_;
  int n_;
  std::vector<Value> entries_;
};

Matrix scalar_mul(const Value& a, const Matrix& A);
Matrix shift_nilpotent(const SemiringPtr& sr, int n);  // D, ones on the first superdiagonal
Matrix shift_cyclic(const SemiringPtr& sr, int n);     // d, D plus a one at (n-1, 0)
Matrix mat_power(const Matrix& A, std::uint64_t k);    // A^0 = E

/// 0/1 support matrix. Addition is union, multiplication is the boolean
/// matrix product; over any additively idempotent carrier these agree
/// with taking patterns after the corresponding matrix operation.
class PatternMatrix {
 public:
  explicit PatternMatrix(int n);
  static PatternMatrix identity(int n);
  static PatternMatrix unit(int n, int i, int j);

  int n() const { return n_; }
  bool bit(int i, int j) const { return bits_[idx(i, j)] != 0; }
  void set(int i, int j, bool v) { bits_[idx(i, j)] = v ? 1 : 0; }

  PatternMatrix operator+(const PatternMatrix& o) const;
  PatternMatrix operator*(const PatternMatrix& o) const;
  bool operator==(const PatternMatrix& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const PatternMatrix& o) const { return !(*this == o); }
  bool operator<(const PatternMatrix& o) const;

  bool is_zero() const;
  Matrix embed(const SemiringPtr& sr) const;  // 0 -> zero, 1 -> one
  std::string str() const;
  nlohmann::json bits_json() const;

 private:
  std::size_t idx(int i, int j) const;
  int n_;
  std::vector<std::uint8_t> bits_;
};

PatternMatrix pattern(const Matrix& A);
bool is_subpattern(const PatternMatrix& p, const PatternMatrix& q);  // p below q entrywise

}  // namespace semider
