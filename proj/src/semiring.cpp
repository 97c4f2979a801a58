#include "semider/semiring.hpp"

#include <algorithm>
#include <set>

namespace semider {

std::vector<Value> Semiring::elements() const {
  throw CapabilityError("semiring '" + name() + "' is not finite: no element list");
}

nlohmann::json Semiring::value_to_json(const Value& v) const {
  switch (v.kind()) {
    case Value::Kind::NegInf:
      return nullptr;
    case Value::Kind::Int:
      return v.as_int();
    case Value::Kind::Poly:
      return v.coeffs();
  }
  return nullptr;
}

Value Semiring::value_from_json(const nlohmann::json& j) const {
  Value v;
  if (j.is_null()) {
    v = Value::neg_inf();
  } else if (j.is_number_integer()) {
    v = Value::integer(j.get<Int>());
  } else if (j.is_array()) {
    std::vector<Int> c;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw ParseError("polynomial coefficient must be an integer");
      c.push_back(x.get<Int>());
    }
    v = Value::poly(std::move(c));
  } else {
    throw ParseError("unsupported entry literal: " + j.dump());
  }
  if (!contains(v)) throw ParseError("value " + v.str() + " is not in carrier '" + name() + "'");
  return v;
}

namespace {

class BoolSemiring final : public Semiring {
 public:
  const std::string& name() const override {
    static const std::string n = "bool";
    return n;
  }
  SemiringFlags flags() const override { return {true, true, true}; }
  Value add(const Value& a, const Value& b) const override {
    return Value::integer(a.as_int() | b.as_int());
  }
  Value mul(const Value& a, const Value& b) const override {
    return Value::integer(a.as_int() & b.as_int());
  }
  Value zero() const override { return Value::integer(0); }
  Value one() const override { return Value::integer(1); }
  bool contains(const Value& v) const override {
    return v.is_int() && (v.as_int() == 0 || v.as_int() == 1);
  }
  std::vector<Value> elements() const override {
    return {Value::integer(0), Value::integer(1)};
  }
  Value sample(Rng& rng, const SampleBounds&) const override {
    return Value::integer(static_cast<Int>(rng.below(2)));
  }
};

// Bounded chain {0..m} under max/min; 0 is the zero, m the unit.
class ChainSemiring final : public Semiring {
 public:
  explicit ChainSemiring(Int m) : m_(m), name_("chain:" + std::to_string(m)) {}
  const std::string& name() const override { return name_; }
  SemiringFlags flags() const override { return {true, true, true}; }
  Value add(const Value& a, const Value& b) const override {
    return Value::integer(std::max(a.as_int(), b.as_int()));
  }
  Value mul(const Value& a, const Value& b) const override {
    return Value::integer(std::min(a.as_int(), b.as_int()));
  }
  Value zero() const override { return Value::integer(0); }
  Value one() const override { return Value::integer(m_); }
  bool contains(const Value& v) const override {
    return v.is_int() && v.as_int() >= 0 && v.as_int() <= m_;
  }
  std::vector<Value> elements() const override {
    std::vector<Value> out;
    for (Int i = 0; i <= m_; ++i) out.push_back(Value::integer(i));
    return out;
  }
  Value sample(Rng& rng, const SampleBounds&) const override {
    return Value::integer(rng.int_in(0, m_));
  }

 private:
  Int m_;
  std::string name_;
};

class MaxPlusSemiring final : public Semiring {
 public:
  const std::string& name() const override {
    static const std::string n = "maxplus-int";
    return n;
  }
  SemiringFlags flags() const override { return {true, true, false}; }
  Value add(const Value& a, const Value& b) const override {
    if (a.is_neg_inf()) return b;
    if (b.is_neg_inf()) return a;
    return Value::integer(std::max(a.as_int(), b.as_int()));
  }
  Value mul(const Value& a, const Value& b) const override {
    if (a.is_neg_inf() || b.is_neg_inf()) return Value::neg_inf();
    return Value::integer(checked_add(a.as_int(), b.as_int()));
  }
  Value zero() const override { return Value::neg_inf(); }
  Value one() const override { return Value::integer(0); }
  bool contains(const Value& v) const override { return v.is_neg_inf() || v.is_int(); }
  Value sample(Rng& rng, const SampleBounds& bounds) const override {
    // One grid slot is reserved for -inf so it shows up in tests.
    if (rng.below(2 * static_cast<std::uint64_t>(bounds.max_int) + 2) == 0)
      return Value::neg_inf();
    return Value::integer(rng.int_in(-bounds.max_int, bounds.max_int));
  }
};

class NatSemiring final : public Semiring {
 public:
  const std::string& name() const override {
    static const std::string n = "nat";
    return n;
  }
  SemiringFlags flags() const override { return {false, true, false}; }
  Value add(const Value& a, const Value& b) const override {
    return Value::integer(checked_add(a.as_int(), b.as_int()));
  }
  Value mul(const Value& a, const Value& b) const override {
    return Value::integer(checked_mul(a.as_int(), b.as_int()));
  }
  Value zero() const override { return Value::integer(0); }
  Value one() const override { return Value::integer(1); }
  bool contains(const Value& v) const override { return v.is_int() && v.as_int() >= 0; }
  Value sample(Rng& rng, const SampleBounds& bounds) const override {
    return Value::integer(rng.int_in(0, bounds.max_int));
  }
};

class NatPolySemiring final : public Semiring {
 public:
  const std::string& name() const override {
    static const std::string n = "natpoly";
    return n;
  }
  SemiringFlags flags() const override { return {false, true, false}; }
  Value add(const Value& a, const Value& b) const override {
    return Value::poly(poly_add(a.coeffs(), b.coeffs()));
  }
  Value mul(const Value& a, const Value& b) const override {
    return Value::poly(poly_mul(a.coeffs(), b.coeffs()));
  }
  Value zero() const override { return Value::poly({}); }
  Value one() const override { return Value::poly({1}); }
  bool contains(const Value& v) const override {
    if (!v.is_poly()) return false;
    for (Int c : v.coeffs())
      if (c < 0) return false;
    return true;
  }
  Value sample(Rng& rng, const SampleBounds& bounds) const override {
    std::vector<Int> c(rng.below(static_cast<std::uint64_t>(bounds.max_poly_degree) + 1) + 1);
    for (auto& x : c) x = rng.int_in(0, bounds.max_poly_coeff);
    return Value::poly(std::move(c));
  }
  Value value_from_json(const nlohmann::json& j) const override {
    // Accept plain integers as constant polynomials for convenience.
    if (j.is_number_integer()) {
      Value v = Value::poly({j.get<Int>()});
      if (!contains(v)) throw ParseError("negative constant in natpoly entry");
      return v;
    }
    return Semiring::value_from_json(j);
  }
};

class CustomSemiring final : public Semiring {
 public:
  CustomSemiring(std::string name, SemiringFlags flags,
                 std::function<Value(const Value&, const Value&)> add,
                 std::function<Value(const Value&, const Value&)> mul, Value zero_elem,
                 Value one_elem, std::optional<std::vector<Value>> element_list,
                 std::function<Value(Rng&, const SampleBounds&)> sample_fn)
      : name_(std::move(name)),
        flags_(flags),
        add_(std::move(add)),
        mul_(std::move(mul)),
        zero_(std::move(zero_elem)),
        one_(std::move(one_elem)),
        elements_(std::move(element_list)),
        sample_(std::move(sample_fn)) {}

  const std::string& name() const override { return name_; }
  SemiringFlags flags() const override { return flags_; }
  Value add(const Value& a, const Value& b) const override { return add_(a, b); }
  Value mul(const Value& a, const Value& b) const override { return mul_(a, b); }
  Value zero() const override { return zero_; }
  Value one() const override { return one_; }
  bool contains(const Value&) const override { return true; }
  std::vector<Value> elements() const override {
    if (!elements_) return Semiring::elements();
    return *elements_;
  }
  Value sample(Rng& rng, const SampleBounds& bounds) const override {
    if (sample_) return sample_(rng, bounds);
    if (elements_) return (*elements_)[rng.below(elements_->size())];
    throw CapabilityError("custom semiring '" + name_ + "' has no sampler");
  }

 private:
  std::string name_;
  SemiringFlags flags_;
  std::function<Value(const Value&, const Value&)> add_, mul_;
  Value zero_, one_;
  std::optional<std::vector<Value>> elements_;
  std::function<Value(Rng&, const SampleBounds&)> sample_;
};

}  // namespace

SemiringPtr make_bool() { return std::make_shared<BoolSemiring>(); }

SemiringPtr make_chain(Int m) {
  if (m < 1) throw ParseError("chain:<m> needs m >= 1");
  return std::make_shared<ChainSemiring>(m);
}

SemiringPtr make_maxplus_int() { return std::make_shared<MaxPlusSemiring>(); }
SemiringPtr make_nat() { return std::make_shared<NatSemiring>(); }
SemiringPtr make_natpoly() { return std::make_shared<NatPolySemiring>(); }

SemiringPtr make_custom(std::string name, SemiringFlags flags,
                        std::function<Value(const Value&, const Value&)> add,
                        std::function<Value(const Value&, const Value&)> mul, Value zero_elem,
                        Value one_elem, std::optional<std::vector<Value>> element_list,
                        std::function<Value(Rng&, const SampleBounds&)> sample_fn) {
  return std::make_shared<CustomSemiring>(std::move(name), flags, std::move(add), std::move(mul),
                                          std::move(zero_elem), std::move(one_elem),
                                          std::move(element_list), std::move(sample_fn));
}

SemiringPtr parse_semiring(const std::string& spec) {
  if (spec == "bool") return make_bool();
  if (spec == "maxplus-int") return make_maxplus_int();
  if (spec == "nat") return make_nat();
  if (spec == "natpoly") return make_natpoly();
  if (spec.rfind("chain:", 0) == 0) {
    try {
      std::size_t pos = 0;
      const std::string arg = spec.substr(6);
      Int m = std::stoll(arg, &pos);
      if (pos != arg.size()) throw ParseError("trailing junk");
      return make_chain(m);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad chain bound in '" + spec + "'");
    }
  }
  throw ParseError("unknown semiring spec '" + spec +
                   "' (expected bool|chain:<m>|maxplus-int|nat|natpoly)");
}

std::vector<Value> enumerate_elements(const SemiringPtr& sr) { return sr->elements(); }

std::vector<Value> enumeration_universe(const SemiringPtr& sr, const SampleBounds& bounds,
                                        std::uint64_t max_objects) {
  if (sr->flags().finite) {
    auto els = sr->elements();
    if (els.size() > max_objects)
      throw BudgetError("carrier '" + sr->name() + "' exceeds enumeration budget");
    return els;
  }
  std::set<Value> out;
  const std::string& n = sr->name();
  auto guard = [&](std::uint64_t count) {
    if (count > max_objects)
      throw BudgetError("bounded universe for '" + n + "' exceeds enumeration budget");
  };
  if (n == "nat") {
    guard(static_cast<std::uint64_t>(bounds.max_int) + 1);
    for (Int i = 0; i <= bounds.max_int; ++i) out.insert(Value::integer(i));
  } else if (n == "maxplus-int") {
    guard(2 * static_cast<std::uint64_t>(bounds.max_int) + 2);
    out.insert(Value::neg_inf());
    for (Int i = -bounds.max_int; i <= bounds.max_int; ++i) out.insert(Value::integer(i));
  } else if (n == "natpoly") {
    std::uint64_t count = 1;
    for (int i = 0; i <= bounds.max_poly_degree; ++i) {
      count *= static_cast<std::uint64_t>(bounds.max_poly_coeff) + 1;
      guard(count);
    }
    std::vector<Int> c(static_cast<std::size_t>(bounds.max_poly_degree) + 1, 0);
    while (true) {
      out.insert(Value::poly(c));
      std::size_t i = 0;
      for (; i < c.size(); ++i) {
        if (c[i] < bounds.max_poly_coeff) {
          ++c[i];
          break;
        }
        c[i] = 0;
      }
      if (i == c.size()) break;
    }
  } else {
    throw CapabilityError("no bounded universe for infinite carrier '" + n + "'");
  }
  return {out.begin(), out.end()};
}

namespace {

struct AxiomContext {
  SemiringPtr sr;
  std::size_t max_witnesses = 5;

  nlohmann::json wit3(const Value& a, const Value& b, const Value& c, const Value& lhs,
                      const Value& rhs) const {
    return {{"inputs",
             {{"a", sr->value_to_json(a)}, {"b", sr->value_to_json(b)}, {"c", sr->value_to_json(c)}}},
            {"lhs", sr->value_to_json(lhs)},
            {"rhs", sr->value_to_json(rhs)}};
  }
  nlohmann::json wit2(const Value& a, const Value& b, const Value& lhs, const Value& rhs) const {
    return {{"inputs", {{"a", sr->value_to_json(a)}, {"b", sr->value_to_json(b)}}},
            {"lhs", sr->value_to_json(lhs)},
            {"rhs", sr->value_to_json(rhs)}};
  }
  nlohmann::json wit1(const Value& a, const Value& lhs, const Value& rhs) const {
    return {{"inputs", {{"a", sr->value_to_json(a)}}},
            {"lhs", sr->value_to_json(lhs)},
            {"rhs", sr->value_to_json(rhs)}};
  }
  void record(CheckResult& cr, nlohmann::json w) const {
    cr.passed = false;
    if (cr.witnesses.size() < max_witnesses) cr.witnesses.push_back(std::move(w));
  }
};

}  // namespace

VerificationReport check_semiring_axioms(const SemiringPtr& sr, const AxiomBudget& budget) {
  VerificationReport rep;
  rep.subject = "semiring:" + sr->name();
  const bool sampled = budget.mode == AxiomBudget::Mode::Sampled;
  rep.mode = sampled ? "sampled" : "exhaustive";
  if (sampled) {
    rep.seed = budget.seed;
    rep.samples = budget.samples;
  } else if (!sr->flags().finite) {
    throw CapabilityError("exhaustive axiom check requested for infinite carrier '" + sr->name() +
                          "'");
  }

  AxiomContext ctx{sr};
  const Value z = sr->zero();
  const Value u = sr->one();

  CheckResult zero_neutral{"zero-neutral"};
  CheckResult one_neutral{"one-neutral"};
  CheckResult zero_annihilates{"zero-annihilates"};
  CheckResult add_comm{"add-commutativity"};
  CheckResult add_assoc{"add-associativity"};
  CheckResult mul_assoc{"mul-associativity"};
  CheckResult left_dist{"left-distributivity"};
  CheckResult right_dist{"right-distributivity"};
  CheckResult zero_sum_free{"zero-sum-free"};
  CheckResult flag_idem{"flag-additive-idempotency", "flag"};
  CheckResult flag_comm{"flag-commutativity", "flag"};

  bool idem_violation = false, comm_violation = false;
  nlohmann::json idem_witness, comm_witness;

  auto check1 = [&](const Value& a) {
    zero_neutral.cases++;
    {
      Value l = sr->add(z, a), r = sr->add(a, z);
      if (l != a) ctx.record(zero_neutral, ctx.wit1(a, l, a));
      if (r != a) ctx.record(zero_neutral, ctx.wit1(a, r, a));
    }
    one_neutral.cases++;
    {
      Value l = sr->mul(u, a), r = sr->mul(a, u);
      if (l != a) ctx.record(one_neutral, ctx.wit1(a, l, a));
      if (r != a) ctx.record(one_neutral, ctx.wit1(a, r, a));
    }
    zero_annihilates.cases++;
    {
      Value l = sr->mul(z, a), r = sr->mul(a, z);
      if (l != z) ctx.record(zero_annihilates, ctx.wit1(a, l, z));
      if (r != z) ctx.record(zero_annihilates, ctx.wit1(a, r, z));
    }
    flag_idem.cases++;
    {
      Value s = sr->add(a, a);
      if (s != a && !idem_violation) {
        idem_violation = true;
        idem_witness = ctx.wit1(a, s, a);
      }
    }
  };

  auto check2 = [&](const Value& a, const Value& b) {
    add_comm.cases++;
    {
      Value l = sr->add(a, b), r = sr->add(b, a);
      if (l != r) ctx.record(add_comm, ctx.wit2(a, b, l, r));
    }
    flag_comm.cases++;
    {
      Value l = sr->mul(a, b), r = sr->mul(b, a);
      if (l != r && !comm_violation) {
        comm_violation = true;
        comm_witness = ctx.wit2(a, b, l, r);
      }
    }
    if (sr->flags().additively_idempotent) {
      zero_sum_free.cases++;
      Value s = sr->add(a, b);
      if (s == z && !(a == z && b == z)) ctx.record(zero_sum_free, ctx.wit2(a, b, s, z));
    }
  };

  auto check3 = [&](const Value& a, const Value& b, const Value& c) {
    add_assoc.cases++;
    {
      Value l = sr->add(sr->add(a, b), c), r = sr->add(a, sr->add(b, c));
      if (l != r) ctx.record(add_assoc, ctx.wit3(a, b, c, l, r));
    }
    mul_assoc.cases++;
    {
      Value l = sr->mul(sr->mul(a, b), c), r = sr->mul(a, sr->mul(b, c));
      if (l != r) ctx.record(mul_assoc, ctx.wit3(a, b, c, l, r));
    }
    left_dist.cases++;
    {
      Value l = sr->mul(a, sr->add(b, c));
      Value r = sr->add(sr->mul(a, b), sr->mul(a, c));
      if (l != r) ctx.record(left_dist, ctx.wit3(a, b, c, l, r));
    }
    right_dist.cases++;
    {
      Value l = sr->mul(sr->add(a, b), c);
      Value r = sr->add(sr->mul(a, c), sr->mul(b, c));
      if (l != r) ctx.record(right_dist, ctx.wit3(a, b, c, l, r));
    }
  };

  if (!sampled) {
    auto els = sr->elements();
    for (const auto& a : els) check1(a);
    for (const auto& a : els)
      for (const auto& b : els) check2(a, b);
    for (const auto& a : els)
      for (const auto& b : els)
        for (const auto& c : els) check3(a, b, c);
  } else {
    Rng rng(budget.seed);
    for (std::uint64_t i = 0; i < budget.samples; ++i) {
      Value a = sr->sample(rng, budget.bounds);
      Value b = sr->sample(rng, budget.bounds);
      Value c = sr->sample(rng, budget.bounds);
      check1(a);
      check2(a, b);
      check3(a, b, c);
    }
  }

  // Declared flags must match observed behaviour in both directions.
  if (sr->flags().additively_idempotent && idem_violation) {
    flag_idem.passed = false;
    flag_idem.witnesses.push_back(idem_witness);
  } else if (!sr->flags().additively_idempotent && !idem_violation) {
    flag_idem.passed = false;
    flag_idem.witnesses.push_back(
        {{"note", "a + a = a held on every tested element but the flag is not set"}});
  }
  if (sr->flags().commutative && comm_violation) {
    flag_comm.passed = false;
    flag_comm.witnesses.push_back(comm_witness);
  } else if (!sr->flags().commutative && !comm_violation) {
    flag_comm.passed = false;
    flag_comm.witnesses.push_back(
        {{"note", "a * b = b * a held on every tested pair but the flag is not set"}});
  }

  rep.checks = {zero_neutral, one_neutral, zero_annihilates, add_comm,  add_assoc, mul_assoc,
                left_dist,    right_dist,  flag_idem,        flag_comm};
  if (sr->flags().additively_idempotent) rep.checks.push_back(zero_sum_free);
  return rep;
}

BaseDerivation poly_derivative_base() {
  return {"polyderiv", make_natpoly(), [](const Value& v) { return poly_derivative(v); }};
}

BaseDerivation identity_base_derivation(const SemiringPtr& sr) {
  if (!sr->flags().additively_idempotent) {
    const Value u = sr->one();
    const Value lhs = sr->mul(u, u);
    const Value rhs = sr->add(sr->mul(u, u), sr->mul(u, u));
    throw CapabilityError("identity map is not a derivation over '" + sr->name() +
                          "': Leibniz fails at a=b=1 (" + lhs.str() + " vs " + rhs.str() + ")");
  }
  return {"identity", sr, [](const Value& v) { return v; }};
}

VerificationReport verify_base_derivation(const BaseDerivation& d, const AxiomBudget& budget) {
  VerificationReport rep;
  const SemiringPtr& sr = d.domain;
  rep.subject = "base-derivation:" + d.name + ":" + sr->name();
  const bool sampled = budget.mode == AxiomBudget::Mode::Sampled;
  rep.mode = sampled ? "sampled" : "exhaustive";
  if (sampled) {
    rep.seed = budget.seed;
    rep.samples = budget.samples;
  } else if (!sr->flags().finite) {
    throw CapabilityError("exhaustive base-derivation check on infinite carrier '" + sr->name() +
                          "'");
  }

  AxiomContext ctx{sr};
  CheckResult additivity{"additivity"};
  CheckResult leibniz{"leibniz"};

  auto check = [&](const Value& a, const Value& b) {
    additivity.cases++;
    {
      Value l = d.map(sr->add(a, b));
      Value r = sr->add(d.map(a), d.map(b));
      if (l != r) ctx.record(additivity, ctx.wit2(a, b, l, r));
    }
    leibniz.cases++;
    {
      Value l = d.map(sr->mul(a, b));
      Value r = sr->add(sr->mul(d.map(a), b), sr->mul(a, d.map(b)));
      if (l != r) ctx.record(leibniz, ctx.wit2(a, b, l, r));
    }
  };

  if (!sampled) {
    auto els = sr->elements();
    for (const auto& a : els)
      for (const auto& b : els) check(a, b);
  } else {
    Rng rng(budget.seed);
    for (std::uint64_t i = 0; i < budget.samples; ++i)
      check(sr->sample(rng, budget.bounds), sr->sample(rng, budget.bounds));
  }

  rep.checks = {additivity, leibniz};
  return rep;
}

}  // namespace semider
