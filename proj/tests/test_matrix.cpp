#include <doctest.h>

#include <algorithm>
#include <vector>

#include "semider/error.hpp"
#include "semider/family.hpp"
#include "semider/matrix.hpp"
#include "semider/rng.hpp"

using namespace semider;

namespace {

std::vector<Matrix> all_matrices(const SemiringPtr& sr, int n) {
  return Family::all(n).enumerate(sr);
}

// Reference pattern product: plain boolean triple loop, no shared code
// with PatternMatrix::operator*.
PatternMatrix naive_pattern_mul(const PatternMatrix& a, const PatternMatrix& b) {
  PatternMatrix r(a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) {
      bool acc = false;
      for (int k = 0; k < a.n(); ++k) acc = acc || (a.bit(i, k) && b.bit(k, j));
      r.set(i, j, acc);
    }
  return r;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("matrix semiring laws hold exhaustively over the Booleans at n=2") {
  auto sr = make_bool();
  const auto ms = all_matrices(sr, 2);
  REQUIRE(ms.size() == 16);
  const Matrix zero = Matrix::zero(sr, 2);
  const Matrix one = Matrix::identity(sr, 2);
  for (const auto& a : ms) {
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK(one * a == a);
    CHECK(a * zero == zero);
    CHECK(zero * a == zero);
    for (const auto& b : ms) {
      CHECK(a + b == b + a);
      for (const auto& c : ms) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
      }
    }
  }
}

TEST_CASE("matrix semiring laws hold on sampled triples over max-plus at n=3") {
  auto sr = make_maxplus_int();
  auto fam = Family::all(3);
  Rng rng(17);
  SampleBounds bounds;
  bounds.max_int = 50;
  for (int it = 0; it < 200; ++it) {
    const Matrix a = fam.sample(sr, rng, bounds);
    const Matrix b = fam.sample(sr, rng, bounds);
    const Matrix c = fam.sample(sr, rng, bounds);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("shift matrices satisfy their power identities for n=2..8") {
  for (const auto& sr : {make_bool(), make_nat()}) {
    for (int n = 2; n <= 8; ++n) {
      const Matrix D = shift_nilpotent(sr, n);
      const Matrix d = shift_cyclic(sr, n);
      INFO("carrier ", sr->name(), " n ", n);
      CHECK(mat_power(D, n) == Matrix::zero(sr, n));
      CHECK(mat_power(D, n - 1) == Matrix::unit(sr, n, 0, n - 1));
      CHECK(mat_power(d, n) == Matrix::identity(sr, n));
      CHECK(pattern(d) == pattern(D) + PatternMatrix::unit(n, n - 1, 0));
    }
  }
}

TEST_CASE("taking patterns commutes with + and * over zero-divisor-free carriers") {
  for (const std::string spec : {"bool", "chain:2"}) {
    auto sr = parse_semiring(spec);
    const auto ms = all_matrices(sr, 2);
    INFO("carrier ", spec, " matrices ", ms.size());
    for (const auto& a : ms)
      for (const auto& b : ms) {
        CHECK(pattern(a + b) == pattern(a) + pattern(b));
        const PatternMatrix lhs = pattern(a * b);
        CHECK(lhs == pattern(a) * pattern(b));
        CHECK(lhs == naive_pattern_mul(pattern(a), pattern(b)));
      }
  }
}

TEST_CASE("matrix units multiply by the index-matching rule") {
  auto sr = make_bool();
  const int n = 3;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Matrix prod = Matrix::unit(sr, n, i, j) * Matrix::unit(sr, n, k, l);
          const Matrix expect = j == k ? Matrix::unit(sr, n, i, l) : Matrix::zero(sr, n);
          CHECK(prod == expect);
        }
}

TEST_CASE("scalar multiplication scales every entry") {
  auto sr = make_nat();
  Matrix A = Matrix::identity(sr, 2);
  A.set(0, 1, Value::integer(3));
  const Matrix B = scalar_mul(Value::integer(5), A);
  CHECK(B.at(0, 0) == Value::integer(5));
  CHECK(B.at(0, 1) == Value::integer(15));
  CHECK(B.at(1, 0) == Value::integer(0));
  CHECK(B.at(1, 1) == Value::integer(5));
}

TEST_CASE("json round trip preserves matrices, including minus-infinity entries") {
  auto mp = make_maxplus_int();
  Matrix A = Matrix::zero(mp, 2);
  A.set(0, 1, Value::integer(3));
  const auto j = A.to_json();
  CHECK(j["n"] == 2);
  CHECK(j["entries"][0][0].is_null());
  CHECK(Matrix::from_json(j) == A);
  const nlohmann::json bare = {{"n", 2}, {"entries", j["entries"]}};
  CHECK(Matrix::from_json(bare, mp) == A);
  CHECK_THROWS_AS(Matrix::from_json(bare), ParseError);  // carrier neither given nor forced

  auto b = make_bool();
  for (const auto& m : all_matrices(b, 2)) CHECK(Matrix::from_json(m.to_json()) == m);
}

TEST_CASE("matrix ordering is strict and total on a small set") {
  auto sr = make_bool();
  auto ms = all_matrices(sr, 2);
  std::sort(ms.begin(), ms.end());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    CHECK_FALSE(ms[i] < ms[i]);
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      CHECK(ms[i] < ms[j]);
      CHECK_FALSE(ms[j] < ms[i]);
    }
  }
}

TEST_CASE("pattern embedding inverts pattern extraction") {
  auto chain = make_chain(2);
  PatternMatrix p(2);
  p.set(0, 0, true);
  p.set(1, 0, true);
  const Matrix m = p.embed(chain);
  CHECK(m.at(0, 0) == chain->one());
  CHECK(m.at(0, 1) == chain->zero());
  CHECK(pattern(m) == p);
  CHECK(is_subpattern(p, PatternMatrix::identity(2) + p));
  CHECK_FALSE(is_subpattern(PatternMatrix::identity(2), p));
}

TEST_CASE("dimension mismatches are rejected rather than truncated") {
  auto sr = make_bool();
  const Matrix a = Matrix::identity(sr, 2);
  const Matrix b = Matrix::identity(sr, 3);
  CHECK_THROWS_AS(a + b, DimensionError);
  CHECK_THROWS_AS(a * b, DimensionError);
}

}  // TEST_SUITE
