#include "semider/value.hpp"

namespace semider {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
  return r;
}

Value Value::neg_inf() {
  Value v;
  v.rep_ = NegInfTag{};
  return v;
}

Value Value::integer(Int x) {
  Value v;
  v.rep_ = x;
  return v;
}

Value Value::poly(std::vector<Int> coeffs) {
  Value v;
  v.rep_ = poly_normalize(std::move(coeffs));
  return v;
}

Int Value::as_int() const {
  if (!is_int()) throw SemiderError("value is not an integer");
  return std::get<Int>(rep_);
}

const std::vector<Int>& Value::coeffs() const {
  if (!is_poly()) throw SemiderError("value is not a polynomial");
  return std::get<std::vector<Int>>(rep_);
}

std::string Value::str() const {
  switch (kind()) {
    case Kind::NegInf:
      return "-inf";
    case Kind::Int:
      return std::to_string(std::get<Int>(rep_));
    case Kind::Poly: {
      const auto& c = std::get<std::vector<Int>>(rep_);
      if (c.empty()) return "0";
      std::string out;
      for (std::size_t d = c.size(); d-- > 0;) {
        if (c[d] == 0) continue;
        if (!out.empty()) out += "+";
        if (d == 0) {
          out += std::to_string(c[d]);
        } else {
          if (c[d] != 1) out += std::to_string(c[d]);
          out += "x";
          if (d > 1) out += "^" + std::to_string(d);
        }
      }
      return out.empty() ? "0" : out;
    }
  }
  return "?";
}

std::vector<Int> poly_normalize(std::vector<Int> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

std::vector<Int> poly_add(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Int x = i < a.size() ? a[i] : 0;
    Int y = i < b.size() ? b[i] : 0;
    r[i] = checked_add(x, y);
  }
  return poly_normalize(std::move(r));
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  return poly_normalize(std::move(r));
}

Value poly_derivative(const Value& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return Value::poly({});
  std::vector<Int> r(c.size() - 1, 0);
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    r[i] = checked_mul(static_cast<Int>(i) + 1, c[i + 1]);
  return Value::poly(std::move(r));
}

}  // namespace semider
