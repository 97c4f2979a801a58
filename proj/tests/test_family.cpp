#include <doctest.h>

#include <string>
#include <vector>

#include "semider/error.hpp"
#include "semider/family.hpp"
#include "semider/rng.hpp"

using namespace semider;

TEST_SUITE("family") {

TEST_CASE("closed families pass the closure check at their smallest useful size") {
  auto sr = make_bool();
  const std::vector<Family> fams = {
      Family::all(2),          Family::diag(3),
      Family::utm(3),          Family::ut_toeplitz(3),
      Family::circulant(3),    Family::arrow(3),
      Family::zero_rows(3, {0}), Family::zero_cross(3, {0}),
      Family::corner_equal(3), Family::block_repeat(3),
      Family::block_repeat(4), Family::tail(4, 2),
  };
  for (const auto& fam : fams) {
    auto rep = closure_check(fam, sr);
    INFO("family ", fam.spec_string());
    CHECK(rep.passed());
    CHECK(rep.find("contains-zero")->passed);
    CHECK(rep.find("closed-under-add")->passed);
    CHECK(rep.find("closed-under-mul")->passed);
  }
}

TEST_CASE("full Toeplitz matrices are not closed under multiplication") {
  auto sr = make_bool();
  const Family fam = Family::toeplitz(3);

  auto rep = closure_check(fam, sr);
  CHECK_FALSE(rep.passed());
  const auto* mul = rep.find("closed-under-mul");
  REQUIRE(mul != nullptr);
  CHECK_FALSE(mul->passed);
  CHECK_FALSE(mul->witnesses.empty());

  // Hand witness: (E + D) * L has diagonal (1,1,0), so it is not a
  // Toeplitz matrix even though both factors are.
  Matrix A = Matrix::identity(sr, 3) + shift_nilpotent(sr, 3);
  Matrix L = Matrix::zero(sr, 3);
  L.set(1, 0, sr->one());
  L.set(2, 1, sr->one());
  REQUIRE(fam.is_member(A));
  REQUIRE(fam.is_member(L));
  CHECK_FALSE(fam.is_member(A * L));
}

TEST_CASE("membership checks the shape, not just the triangle") {
  auto sr = make_bool();
  const Family ut = Family::ut_toeplitz(3);
  Matrix A = Matrix::identity(sr, 3);
  A.set(0, 1, sr->one());
  A.set(1, 2, sr->one());
  CHECK(ut.is_member(A));
  A.set(1, 2, sr->zero());  // breaks the constant superdiagonal
  CHECK_FALSE(ut.is_member(A));

  const Family ar = Family::arrow(3);
  Matrix B = Matrix::identity(sr, 3);
  B.set(0, 2, sr->one());
  CHECK(ar.is_member(B));
  B.set(1, 0, sr->one());
  CHECK_FALSE(ar.is_member(B));
}

TEST_CASE("enumeration sizes match the parameter counts over the Booleans") {
  auto sr = make_bool();
  CHECK(Family::all(2).enumerate(sr).size() == 16);
  CHECK(Family::diag(3).enumerate(sr).size() == 8);
  CHECK(Family::utm(3).enumerate(sr).size() == 64);
  CHECK(Family::ut_toeplitz(3).enumerate(sr).size() == 8);
  CHECK(Family::toeplitz(3).enumerate(sr).size() == 32);
  CHECK(Family::circulant(3).enumerate(sr).size() == 8);
  CHECK(Family::tail(4, 2).enumerate(sr).size() == 8);
  CHECK(Family::all(3).enumerate(sr).size() == 512);
}

TEST_CASE("enumeration over an explicit universe respects the budget") {
  auto nat = make_nat();
  const std::vector<Value> u = {Value::integer(0), Value::integer(1), Value::integer(2)};
  CHECK(Family::diag(2).enumerate(nat, u, 1u << 20).size() == 9);
  CHECK_THROWS_AS(Family::utm(3).enumerate(nat, u, 10), BudgetError);
  CHECK_THROWS_AS(Family::diag(2).enumerate(nat), CapabilityError);
}

TEST_CASE("coefficients round trip through matrices for every family") {
  auto sr = make_bool();
  const std::vector<Family> fams = {
      Family::diag(3),         Family::utm(3),          Family::ut_toeplitz(3),
      Family::toeplitz(3),     Family::circulant(3),    Family::arrow(3),
      Family::zero_rows(3, {1}), Family::zero_cross(3, {2}), Family::corner_equal(3),
      Family::block_repeat(4), Family::tail(4, 2),
  };
  for (const auto& fam : fams) {
    INFO("family ", fam.spec_string());
    for (const auto& m : fam.enumerate(sr)) {
      const auto coeffs = fam.extract_coeffs(m);
      CHECK(coeffs.size() == fam.param_count());
      CHECK(fam.from_coeffs(sr, coeffs) == m);
    }
  }
}

TEST_CASE("extract_coeffs rejects outsiders") {
  auto sr = make_bool();
  Matrix below = Matrix::zero(sr, 3);
  below.set(2, 0, sr->one());
  CHECK_THROWS_AS(Family::utm(3).extract_coeffs(below), MembershipError);
}

TEST_CASE("upper triangular Toeplitz coefficients build shift polynomials") {
  auto nat = make_nat();
  const Family ut = Family::ut_toeplitz(3);
  const std::vector<Value> coeffs = {Value::integer(2), Value::integer(3), Value::integer(5)};
  const Matrix built = ut.from_coeffs(nat, coeffs);
  const Matrix D = shift_nilpotent(nat, 3);
  const Matrix expect = scalar_mul(Value::integer(2), Matrix::identity(nat, 3)) +
                        scalar_mul(Value::integer(3), D) +
                        scalar_mul(Value::integer(5), mat_power(D, 2));
  CHECK(built == expect);

  const Family cm = Family::circulant(3);
  const Matrix d = shift_cyclic(nat, 3);
  const Matrix builtc = cm.from_coeffs(nat, coeffs);
  const Matrix expectc = scalar_mul(Value::integer(2), Matrix::identity(nat, 3)) +
                         scalar_mul(Value::integer(3), d) +
                         scalar_mul(Value::integer(5), mat_power(d, 2));
  CHECK(builtc == expectc);
}

TEST_CASE("shift polynomial families commute pairwise over the Booleans") {
  auto sr = make_bool();
  for (const auto& fam : {Family::ut_toeplitz(3), Family::circulant(3)}) {
    const auto ms = fam.enumerate(sr);
    INFO("family ", fam.spec_string());
    for (const auto& a : ms)
      for (const auto& b : ms) CHECK(a * b == b * a);
  }
}

TEST_CASE("spec strings use one-based index lists") {
  auto sr = make_bool();
  const Family zr = parse_family("zero-rows:1", 3);
  for (const auto& m : zr.enumerate(sr))
    for (int j = 0; j < 3; ++j) CHECK(m.at(0, j) == sr->zero());

  const Family zc = parse_family("zero-cross:2", 3);
  for (const auto& m : zc.enumerate(sr))
    for (int j = 0; j < 3; ++j) {
      CHECK(m.at(1, j) == sr->zero());
      CHECK(m.at(j, 1) == sr->zero());
    }

  CHECK(parse_family("tail:2", 5).tail_k() == 2);
  CHECK(parse_family("ut-toeplitz", 4).param_count() == 4);
  CHECK_THROWS_AS(parse_family("spiral", 3), ParseError);
  CHECK_THROWS_AS(parse_family("zero-rows:0", 3), ParseError);
  CHECK_THROWS_AS(parse_family("zero-rows:4", 3), ParseError);
}

TEST_CASE("block repeat ties the leading block to the trailing one") {
  auto sr = make_bool();
  for (const auto& m : Family::block_repeat(4).enumerate(sr)) {
    CHECK(m.at(0, 0) == m.at(2, 2));
    CHECK(m.at(0, 1) == m.at(2, 3));
    CHECK(m.at(1, 1) == m.at(3, 3));
    CHECK(m.at(1, 0) == sr->zero());
  }
  // n=3 overlaps the two blocks; the ties merge into one diagonal class.
  for (const auto& m : Family::block_repeat(3).enumerate(sr)) {
    CHECK(m.at(0, 0) == m.at(1, 1));
    CHECK(m.at(1, 1) == m.at(2, 2));
    CHECK(m.at(0, 1) == m.at(1, 2));
  }
}

TEST_CASE("corner equal ties exactly the two diagonal corners") {
  auto sr = make_bool();
  std::size_t with_distinct_middle = 0;
  for (const auto& m : Family::corner_equal(3).enumerate(sr)) {
    CHECK(m.at(0, 0) == m.at(2, 2));
    if (m.at(1, 1) != m.at(0, 0)) ++with_distinct_middle;
  }
  CHECK(with_distinct_middle > 0);
}

TEST_CASE("sampled members stay inside their family") {
  Rng rng(23);
  SampleBounds bounds;
  bounds.max_int = 9;
  for (const auto& sr : {make_maxplus_int(), make_nat(), make_natpoly()}) {
    for (const auto& fam : {Family::utm(3), Family::circulant(3), Family::tail(4, 2)}) {
      for (int it = 0; it < 50; ++it) {
        const Matrix m = fam.sample(sr, rng, bounds);
        INFO("carrier ", sr->name(), " family ", fam.spec_string());
        CHECK(fam.is_member(m));
      }
    }
  }
}

}  // TEST_SUITE
