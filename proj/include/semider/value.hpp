#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "semider/error.hpp"

namespace semider {

using Int = std::int64_t;

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Exact scalar value: an integer, the max-plus minus-infinity, or a
/// polynomial over the naturals (little-endian coefficients, normalized
/// so there is no trailing zero; the zero polynomial has no coefficients).
class Value {
 public:
  enum class Kind { NegInf = 0, Int = 1, Poly = 2 };

  Value() : rep_(Int{0}) {}

  static Value neg_inf();
  static Value integer(Int x);
  static Value poly(std::vector<Int> coeffs);

  Kind kind() const { return static_cast<Kind>(rep_.index()); }
  bool is_neg_inf() const { return kind() == Kind::NegInf; }
  bool is_int() const { return kind() == Kind::Int; }
  bool is_poly() const { return kind() == Kind::Poly; }

  Int as_int() const;
  const std::vector<Int>& coeffs() const;

  bool operator==(const Value& o) const { return rep_ == o.rep_; }
  bool operator!=(const Value& o) const { return !(*this == o); }
  bool operator<(const Value& o) const { return rep_ < o.rep_; }

  std::string str() const;

 private:
  struct NegInfTag {
    bool operator==(const NegInfTag&) const { return true; }
    bool operator<(const NegInfTag&) const { return false; }
  };
  std::variant<NegInfTag, Int, std::vector<Int>> rep_;
};

std::vector<Int> poly_normalize(std::vector<Int> c);
std::vector<Int> poly_add(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b);

/// d/dx on N0[x]: coefficient i of the result is (i+1)*c_{i+1}.
Value poly_derivative(const Value& p);

}  // namespace semider
