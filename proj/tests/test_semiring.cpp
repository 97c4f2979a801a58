#include <doctest.h>

#include <string>
#include <vector>

#include "semider/error.hpp"
#include "semider/semiring.hpp"

using namespace semider;

namespace {

// Independent route to d/dx: coefficient i of the result is built by
// adding c_{i+1} to itself i+1 times, never multiplying. Any slip in the
// (i+1)*c_{i+1} rule shows up as a mismatch against this.
Value derivative_by_repeated_addition(const Value& p) {
  if (!p.is_poly()) return Value::poly({});
  const auto& c = p.coeffs();
  if (c.size() <= 1) return Value::poly({});
  std::vector<Int> r(c.size() - 1, 0);
  for (std::size_t i = 1; i < c.size(); ++i) {
    for (std::size_t rep = 0; rep < i; ++rep) r[i - 1] = checked_add(r[i - 1], c[i]);
  }
  return Value::poly(std::move(r));
}

std::vector<Value> all_polys(Int max_coeff, int max_degree) {
  std::vector<Value> out;
  std::vector<Int> c(static_cast<std::size_t>(max_degree) + 1, 0);
  while (true) {
    out.push_back(Value::poly(c));
    std::size_t i = 0;
    while (i < c.size() && c[i] == max_coeff) c[i++] = 0;
    if (i == c.size()) break;
    ++c[i];
  }
  return out;
}

}  // namespace

TEST_SUITE("semiring") {

TEST_CASE("axioms hold exhaustively on the finite carriers") {
  for (const std::string spec : {"bool", "chain:2", "chain:3"}) {
    auto sr = parse_semiring(spec);
    auto rep = check_semiring_axioms(sr, {});
    INFO("carrier ", spec);
    CHECK(rep.passed());
    CHECK(rep.mode == "exhaustive");
  }
}

TEST_CASE("axioms hold on sampled triples over the infinite carriers, reproducibly") {
  for (const std::string spec : {"maxplus-int", "nat", "natpoly"}) {
    AxiomBudget budget;
    budget.mode = AxiomBudget::Mode::Sampled;
    budget.samples = 10000;
    budget.seed = 11;
    auto sr = parse_semiring(spec);
    auto rep = check_semiring_axioms(sr, budget);
    INFO("carrier ", spec);
    CHECK(rep.passed());
    CHECK(rep.mode == "sampled");
    CHECK(rep.samples >= 10000);
    auto rep2 = check_semiring_axioms(sr, budget);
    CHECK(rep.to_json().dump() == rep2.to_json().dump());
  }
}

TEST_CASE("additively idempotent carriers verify zero-sum-freeness") {
  for (const std::string spec : {"bool", "chain:3", "maxplus-int"}) {
    AxiomBudget budget;
    if (spec == std::string("maxplus-int")) {
      budget.mode = AxiomBudget::Mode::Sampled;
      budget.seed = 3;
    }
    auto rep = check_semiring_axioms(parse_semiring(spec), budget);
    const auto* zsf = rep.find("zero-sum-free");
    INFO("carrier ", spec);
    REQUIRE(zsf != nullptr);
    CHECK(zsf->passed);
  }
}

TEST_CASE("carrier arithmetic spot values") {
  auto chain = make_chain(3);
  CHECK(chain->one() == Value::integer(3));
  CHECK(chain->add(Value::integer(1), Value::integer(2)) == Value::integer(2));
  CHECK(chain->mul(Value::integer(1), Value::integer(2)) == Value::integer(1));

  auto mp = make_maxplus_int();
  CHECK(mp->zero() == Value::neg_inf());
  CHECK(mp->one() == Value::integer(0));
  CHECK(mp->add(Value::integer(3), Value::integer(5)) == Value::integer(5));
  CHECK(mp->mul(Value::integer(3), Value::integer(5)) == Value::integer(8));
  CHECK(mp->mul(Value::neg_inf(), Value::integer(5)) == Value::neg_inf());

  auto np = make_natpoly();
  CHECK(np->zero() == Value::poly({}));
  CHECK(Value::poly({0, 0}) == Value::poly({}));  // trailing zeros normalized away
  CHECK(np->value_from_json(nlohmann::json(5)) == Value::poly({5}));
  CHECK(np->value_from_json(nlohmann::json::array({0, 2})) == Value::poly({0, 2}));

  CHECK(mp->value_from_json(nlohmann::json()) == Value::neg_inf());
  CHECK(mp->value_to_json(Value::neg_inf()).is_null());
}

TEST_CASE("checked integer arithmetic refuses to wrap") {
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 5) == -20);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(INT64_MAX / 2, 3), OverflowError);
}

TEST_CASE("polynomial derivative matches frozen values") {
  CHECK(poly_derivative(Value::poly({3, 2, 0, 1})) == Value::poly({2, 0, 3}));
  CHECK(poly_derivative(Value::poly({7})) == Value::poly({}));
  CHECK(poly_derivative(Value::poly({})) == Value::poly({}));
  CHECK(poly_derivative(Value::poly({0, 1})) == Value::poly({1}));
  CHECK(poly_derivative(Value::poly({0, 0, 0, 0, 2})) == Value::poly({0, 0, 0, 8}));
}

TEST_CASE("polynomial derivative agrees with the repeated-addition route") {
  for (const auto& p : all_polys(3, 4)) {
    if (poly_derivative(p) != derivative_by_repeated_addition(p)) {
      CAPTURE(p.str());
      FAIL_CHECK("derivative mismatch");
    }
  }
}

TEST_CASE("polynomial derivative is additive and Leibniz over every small pair") {
  auto np = make_natpoly();
  const auto polys = all_polys(3, 4);  // 1024 polynomials
  std::uint64_t bad = 0;
  std::string first;
  for (const auto& p : polys) {
    const Value dp = poly_derivative(p);
    for (const auto& q : polys) {
      const Value dq = poly_derivative(q);
      const bool additive = poly_derivative(np->add(p, q)) == np->add(dp, dq);
      const Value lhs = poly_derivative(np->mul(p, q));
      const Value rhs = np->add(np->mul(dp, q), np->mul(p, dq));
      if (!additive || lhs != rhs) {
        if (bad == 0) first = p.str() + " , " + q.str();
        ++bad;
      }
    }
  }
  CAPTURE(first);
  CHECK(bad == 0);
}

TEST_CASE("base derivation verifier accepts d/dx on sampled pairs") {
  AxiomBudget budget;
  budget.mode = AxiomBudget::Mode::Sampled;
  budget.samples = 2000;
  budget.seed = 5;
  auto rep = verify_base_derivation(poly_derivative_base(), budget);
  CHECK(rep.passed());
  CHECK(rep.find("additivity") != nullptr);
  CHECK(rep.find("leibniz") != nullptr);
}

TEST_CASE("identity map is a derivation exactly on additively idempotent carriers") {
  for (const std::string spec : {"bool", "chain:2", "maxplus-int"}) {
    auto base = identity_base_derivation(parse_semiring(spec));
    AxiomBudget budget;
    if (spec == std::string("maxplus-int")) {
      budget.mode = AxiomBudget::Mode::Sampled;
      budget.seed = 9;
    }
    INFO("carrier ", spec);
    CHECK(verify_base_derivation(base, budget).passed());
  }
  CHECK_THROWS_AS(identity_base_derivation(make_nat()), CapabilityError);
  CHECK_THROWS_AS(identity_base_derivation(make_natpoly()), CapabilityError);
}

TEST_CASE("spec strings parse to the right carriers") {
  CHECK(parse_semiring("bool")->elements().size() == 2);
  CHECK(parse_semiring("chain:4")->elements().size() == 5);
  CHECK(parse_semiring("maxplus-int")->flags().additively_idempotent);
  CHECK_FALSE(parse_semiring("nat")->flags().additively_idempotent);
  CHECK_THROWS_AS(parse_semiring("ring-of-integers"), ParseError);
  CHECK_THROWS_AS(parse_semiring("chain:x"), ParseError);
}

}  // TEST_SUITE
